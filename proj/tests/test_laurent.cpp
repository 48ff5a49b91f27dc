#include <doctest.h>

#include <random>

#include <superchar/errors.hpp>
#include <superchar/laurent.hpp>
#include <superchar/series.hpp>

using namespace superchar;

namespace
{

LaurentPoly random_poly(const VarTablePtr &vars, std::mt19937_64 &rng, int max_terms = 4, int max_exp = 2)
{
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> e(-max_exp, max_exp);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Exponent x;
        for (std::size_t i = 0; i < vars->size(); ++i) {
            x.set(i, e(rng));
        }
        terms.push_back({x, Integer(c(rng))});
    }
    return LaurentPoly::from_terms(vars, std::move(terms));
}

// Independent evaluator: substitutes integers (nonzero) for each variable
// using rational arithmetic on numerator and denominator separately.
struct Rat {
    Integer num, den;
};

Rat evaluate(const LaurentPoly &p, const std::vector<int> &point)
{
    Rat sum{0, 1};
    for (const auto &t : p.terms()) {
        Integer num = t.coeff, den = 1;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (int k = 0; k < std::abs(t.exp[i]); ++k) {
                (t.exp[i] > 0 ? num : den) *= point[i];
            }
        }
        sum = {sum.num * den + num * sum.den, sum.den * den};
    }
    return sum;
}

bool same_value(const Rat &a, const Rat &b)
{
    return a.num * b.den == b.num * a.den;
}

} // namespace

TEST_CASE("ring operation examples")
{
    const auto vars = make_vars({"x1"});
    const auto x = LaurentPoly::variable(vars, "x1");
    const auto xi = LaurentPoly::variable(vars, "x1", -1);
    CHECK((x + (-x)).is_zero());
    const auto sq = pow(x + xi, 2);
    Exponent e2, em2;
    e2.set(0, 2);
    em2.set(0, -2);
    CHECK(sq == LaurentPoly::monomial(vars, e2) + LaurentPoly(vars, 2) + LaurentPoly::monomial(vars, em2));
    CHECK(sq * LaurentPoly(vars, 1) == sq);
    CHECK(sq.to_string() == "x1^2 + 2 + x1^-2");
}

TEST_CASE("mismatched tables are rejected")
{
    const auto a = LaurentPoly::variable(make_vars({"x1"}), "x1");
    const auto b = LaurentPoly::variable(make_vars({"y1"}), "y1");
    CHECK_THROWS_AS(a + b, invalid_input);
    CHECK_THROWS_AS(a * b, invalid_input);
    // Equal names in distinct table objects are compatible.
    const auto c = LaurentPoly::variable(make_vars({"x1"}), "x1");
    CHECK((a - c).is_zero());
}

TEST_CASE("specialize examples")
{
    const auto vars = make_vars({"x1", "x2", "y1"});
    const auto x1 = LaurentPoly::variable(vars, "x1");
    const auto x2 = LaurentPoly::variable(vars, "x2");
    const auto y1 = LaurentPoly::variable(vars, "y1");
    Exponent e1;
    e1.set(0, 1);
    CHECK(specialize(x1 + x2, {{"x2", SignedMonomial{1, e1.negated()}}})
          == x1 + LaurentPoly::variable(vars, "x1", -1));
    CHECK(specialize(x1 + x2, {{"x2", SignedMonomial{-1, Exponent{}}}}) == x1 - LaurentPoly(vars, 1));
    CHECK(specialize(x1 * y1, {{"y1", SignedMonomial{1, Exponent{}}}}) == x1);
    // Into a smaller table.
    const auto small = make_vars({"x1"});
    CHECK(specialize(x1 * y1, {{"y1", SignedMonomial{}}, {"x2", SignedMonomial{}}}, small)
          == LaurentPoly::variable(small, "x1"));
    CHECK_THROWS_AS(specialize(x1 * x2, {}, small), invalid_input);
    CHECK_THROWS_AS(specialize(x1, {{"z", SignedMonomial{}}}), invalid_input);
}

TEST_CASE("eval_all_ones examples")
{
    const auto vars = make_vars({"x1"});
    const auto x = LaurentPoly::variable(vars, "x1");
    const auto xi = LaurentPoly::variable(vars, "x1", -1);
    CHECK(eval_all_ones(x + LaurentPoly(vars, 1) + xi) == 3);
    CHECK(eval_all_ones(LaurentPoly(vars)) == 0);
    CHECK(eval_all_ones(pow(x + xi, 2)) == 4);
}

TEST_CASE("series examples")
{
    const auto vars = make_vars({"x1", "y1"});
    const auto x = LaurentPoly::variable(vars, "x1");
    const auto y = LaurentPoly::variable(vars, "y1");
    const LaurentPoly one(vars, 1);

    const TruncatedSeries a(vars, 3, {one, -x});
    const auto inv = series_inv(a);
    CHECK(inv.coeffs() == std::vector<LaurentPoly>{one, x, x * x, x * x * x});

    const TruncatedSeries b(vars, 3, {one, -y});
    const auto prod = series_mul(b, series_inv(b));
    CHECK(prod == TruncatedSeries::one(vars, 3));

    const TruncatedSeries c(vars, 3, {one, -one});
    const TruncatedSeries d(vars, 3, {one, one});
    const auto e = series_mul(series_inv(c), d);
    CHECK(e.coeffs() == std::vector<LaurentPoly>{one, one * 2, one * 2, one * 2});

    CHECK_THROWS_AS(series_inv(TruncatedSeries(vars, 2, {one * 2})), invalid_input);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(20240611);
    const auto vars = make_vars({"a", "b", "c"});
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = random_poly(vars, rng);
        const auto q = random_poly(vars, rng);
        const auto r = random_poly(vars, rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("multiplication agrees with pointwise evaluation")
{
    std::mt19937_64 rng(7);
    const auto vars = make_vars({"a", "b"});
    const std::vector<std::vector<int>> points{{2, 3}, {-5, 7}, {11, -2}};
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(vars, rng, 5, 3);
        const auto q = random_poly(vars, rng, 5, 3);
        for (const auto &pt : points) {
            const auto vp = evaluate(p, pt), vq = evaluate(q, pt);
            CHECK(same_value(evaluate(p * q, pt), {vp.num * vq.num, vp.den * vq.den}));
            CHECK(same_value(evaluate(p + q, pt), {vp.num * vq.den + vq.num * vp.den, vp.den * vq.den}));
        }
    }
}

TEST_CASE("specialize is a ring homomorphism")
{
    std::mt19937_64 rng(99);
    const auto vars = make_vars({"a", "b", "c"});
    Exponent ea, eb;
    ea.set(0, 1);
    eb.set(1, -2);
    const Substitution sub{{"c", SignedMonomial{-1, ea + eb}}, {"b", SignedMonomial{-1, Exponent{}}}};
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = random_poly(vars, rng);
        const auto q = random_poly(vars, rng);
        CHECK(specialize(p * q, sub) == specialize(p, sub) * specialize(q, sub));
        CHECK(specialize(p + q, sub) == specialize(p, sub) + specialize(q, sub));
    }
}

TEST_CASE("series inverse on random unit series")
{
    std::mt19937_64 rng(3);
    const auto vars = make_vars({"a", "b"});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<LaurentPoly> cs{LaurentPoly(vars, 1)};
        for (int k = 1; k <= 4; ++k) {
            cs.push_back(random_poly(vars, rng, 3, 1));
        }
        const TruncatedSeries a(vars, 4, cs);
        CHECK(series_mul(a, series_inv(a)) == TruncatedSeries::one(vars, 4));
    }
}

TEST_CASE("truncated multiplication")
{
    const auto vars = make_vars({"x", "t"});
    const auto t = LaurentPoly::variable(vars, "t");
    const auto x = LaurentPoly::variable(vars, "x");
    const LaurentPoly one(vars, 1);
    const std::vector<int> w{0, 1};
    const auto p = one + t + x * t;
    CHECK(multiply_truncated(p, p, w, 1) == truncate_degree(p * p, w, 1));
    CHECK(multiply_truncated(p, p, w, 1) == one + t * 2 + x * t * 2);
}

TEST_CASE("exact division")
{
    const auto vars = make_vars({"a", "b"});
    const auto a = LaurentPoly::variable(vars, "a");
    const auto b = LaurentPoly::variable(vars, "b");
    const auto q = (a - b) * (a + b * 3);
    CHECK(exact_divide(q * (a * a + b), a - b) == (a + b * 3) * (a * a + b));
    CHECK_THROWS_AS(exact_divide(a * a + b, a - b), internal_error);
    CHECK_THROWS_AS((a * 3).divided_exactly(2), internal_error);
    CHECK((a * 4).divided_exactly(2) == a * 2);
}

TEST_CASE("json round trip and canonical ordering")
{
    const auto vars = make_vars({"x1", "y1"});
    const auto x = LaurentPoly::variable(vars, "x1");
    const auto y = LaurentPoly::variable(vars, "y1", -1);
    const auto big = pow(x * 7 + y, 30);
    const auto j = to_json(big);
    CHECK(poly_from_json(j) == big);
    const auto j2 = to_json(LaurentPoly::variable(vars, "y1") + x);
    CHECK(j2.dump() == R"({"terms":[{"coeff":"1","exp":[0,1]},{"coeff":"1","exp":[1,0]}],"vars":["x1","y1"]})");
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"vars":["a"],"terms":[{"exp":[1,2],"coeff":"1"}]})")),
                    invalid_input);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"vars":["a"],"terms":[{"exp":[1],"coeff":"z"}]})")),
                    invalid_input);
}
