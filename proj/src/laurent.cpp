#include <superchar/laurent.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

#include <superchar/errors.hpp>

namespace superchar
{

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.size() > max_vars) {
        throw invalid_input("variable table too large: " + std::to_string(names_.size()) + " > "
                            + std::to_string(max_vars));
    }
    std::set<std::string_view> seen;
    for (const auto &n : names_) {
        if (n.empty()) {
            throw invalid_input("variable names must be non-empty");
        }
        if (!seen.insert(n).second) {
            throw invalid_input("duplicate variable name '" + n + "'");
        }
    }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const
{
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

VarTablePtr make_vars(std::vector<std::string> names)
{
    return std::make_shared<const VarTable>(std::move(names));
}

VarTablePtr make_indexed_vars(std::string_view prefix, std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(std::string(prefix) + std::to_string(i));
    }
    return make_vars(std::move(names));
}

bool same_vars(const VarTablePtr &a, const VarTablePtr &b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Exponent

namespace
{

std::int16_t narrow_exponent(int v)
{
    if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max()) {
        throw internal_error("exponent overflow: " + std::to_string(v));
    }
    return static_cast<std::int16_t>(v);
}

} // namespace

void Exponent::set(std::size_t i, int value)
{
    e_.at(i) = narrow_exponent(value);
}

Exponent &Exponent::operator+=(const Exponent &o)
{
    for (std::size_t i = 0; i < max_vars; ++i) {
        e_[i] = narrow_exponent(int(e_[i]) + int(o.e_[i]));
    }
    return *this;
}

Exponent &Exponent::operator-=(const Exponent &o)
{
    for (std::size_t i = 0; i < max_vars; ++i) {
        e_[i] = narrow_exponent(int(e_[i]) - int(o.e_[i]));
    }
    return *this;
}

Exponent Exponent::negated() const
{
    return scaled(-1);
}

Exponent Exponent::scaled(int k) const
{
    Exponent out;
    for (std::size_t i = 0; i < max_vars; ++i) {
        out.e_[i] = narrow_exponent(int(e_[i]) * k);
    }
    return out;
}

bool Exponent::is_zero() const noexcept
{
    return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
}

bool Exponent::is_nonnegative() const noexcept
{
    return std::all_of(e_.begin(), e_.end(), [](auto v) { return v >= 0; });
}

int Exponent::total() const noexcept
{
    int t = 0;
    for (auto v : e_) {
        t += v;
    }
    return t;
}

std::size_t Exponent::hash() const noexcept
{
    // FNV-1a over the exponent slots.
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) {
        h ^= static_cast<std::uint16_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(VarTablePtr vars) : vars_(std::move(vars))
{
    if (!vars_) {
        throw invalid_input("polynomial requires a variable table");
    }
}

LaurentPoly::LaurentPoly(VarTablePtr vars, Integer constant) : LaurentPoly(std::move(vars))
{
    if (constant != 0) {
        terms_.push_back({Exponent{}, std::move(constant)});
    }
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, const Exponent &exp, Integer coeff)
{
    LaurentPoly p(std::move(vars));
    if (coeff != 0) {
        p.terms_.push_back({exp, std::move(coeff)});
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, const SignedMonomial &m)
{
    return monomial(std::move(vars), m.exp, Integer(m.sign));
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, std::string_view name, int power)
{
    const auto idx = vars->index_of(name);
    if (!idx) {
        throw invalid_input("unknown variable '" + std::string(name) + "'");
    }
    Exponent e;
    e.set(*idx, power);
    return monomial(std::move(vars), e);
}

LaurentPoly LaurentPoly::from_terms(VarTablePtr vars, std::vector<Term> terms)
{
    LaurentPoly p(std::move(vars));
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.exp < b.exp; });
    for (auto &t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) {
                p.terms_.pop_back();
            }
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_polynomial() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.exp.is_nonnegative(); });
}

Integer LaurentPoly::coeff(const Exponent &exp) const
{
    const auto it
        = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term &t, const Exponent &e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) {
        return it->coeff;
    }
    return 0;
}

const Term &LaurentPoly::leading_term() const
{
    if (terms_.empty()) {
        throw invalid_input("the zero polynomial has no leading term");
    }
    return terms_.back();
}

LaurentPoly LaurentPoly::shifted(const Exponent &exp, int sign) const
{
    LaurentPoly out(vars_);
    out.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        out.terms_.push_back({t.exp + exp, sign < 0 ? Integer(-t.coeff) : t.coeff});
    }
    return out;
}

LaurentPoly LaurentPoly::relabeled(VarTablePtr vars) const
{
    if (!vars || vars->size() != vars_->size()) {
        throw invalid_input("relabel requires a table of the same size");
    }
    LaurentPoly out(std::move(vars));
    out.terms_ = terms_;
    return out;
}

void LaurentPoly::check_compatible(const LaurentPoly &o) const
{
    if (!same_vars(vars_, o.vars_)) {
        throw invalid_input("polynomials over different variable tables");
    }
}

void LaurentPoly::add_scaled(const LaurentPoly &o, int sign)
{
    check_compatible(o);
    if (o.terms_.empty()) {
        return;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->exp < i->exp) {
            merged.push_back({j->exp, sign < 0 ? Integer(-j->coeff) : j->coeff});
            ++j;
        } else {
            Integer c = std::move(i->coeff);
            if (sign < 0) {
                c -= j->coeff;
            } else {
                c += j->coeff;
            }
            if (c != 0) {
                merged.push_back({i->exp, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    add_scaled(o, 1);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    add_scaled(o, -1);
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Integer &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coeff *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out(*this);
    for (auto &t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

namespace
{

LaurentPoly multiply_impl(const LaurentPoly &a, const LaurentPoly &b, std::span<const int> weights, int max_degree)
{
    const bool truncating = !weights.empty();
    const auto weight_of = [&](const Exponent &e) {
        int d = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            d += weights[i] * e[i];
        }
        return d;
    };
    if (!same_vars(a.vars(), b.vars())) {
        throw invalid_input("polynomials over different variable tables");
    }
    if (a.is_zero() || b.is_zero()) {
        return LaurentPoly(a.vars());
    }
    if (!truncating && (a.size() == 1 || b.size() == 1)) {
        const auto &mono = a.size() == 1 ? a.terms()[0] : b.terms()[0];
        const auto &other = a.size() == 1 ? b : a;
        auto out = other.shifted(mono.exp);
        return out *= mono.coeff;
    }
    std::unordered_map<Exponent, Integer, ExponentHash> acc;
    acc.reserve(a.size() * b.size());
    std::vector<int> wb;
    if (truncating) {
        wb.reserve(b.size());
        for (const auto &tb : b.terms()) {
            wb.push_back(weight_of(tb.exp));
        }
    }
    for (const auto &ta : a.terms()) {
        const int wa = truncating ? weight_of(ta.exp) : 0;
        for (std::size_t k = 0; k < b.size(); ++k) {
            const auto &tb = b.terms()[k];
            if (truncating && wa + wb[k] > max_degree) {
                continue;
            }
            auto [it, inserted] = acc.try_emplace(ta.exp + tb.exp);
            if (inserted) {
                it->second = ta.coeff * tb.coeff;
            } else {
                it->second += ta.coeff * tb.coeff;
            }
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto &[e, c] : acc) {
        if (c != 0) {
            terms.push_back({e, std::move(c)});
        }
    }
    return LaurentPoly::from_terms(a.vars(), std::move(terms));
}

} // namespace

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    return multiply_impl(a, b, {}, 0);
}

LaurentPoly LaurentPoly::divided_exactly(const Integer &d) const
{
    if (d == 0) {
        throw invalid_input("division by zero");
    }
    LaurentPoly out(vars_);
    out.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        Integer q, r;
        boost::multiprecision::divide_qr(t.coeff, d, q, r);
        if (r != 0) {
            throw internal_error("inexact division of coefficient " + t.coeff.str() + " by " + d.str());
        }
        out.terms_.push_back({t.exp, std::move(q)});
    }
    return out;
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b)
{
    return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

std::string to_string(const SignedMonomial &m, const VarTable &vars)
{
    std::string body;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m.exp[i] == 0) {
            continue;
        }
        if (!body.empty()) {
            body += "*";
        }
        body += vars.name(i);
        if (m.exp[i] != 1) {
            body += "^" + std::to_string(m.exp[i]);
        }
    }
    if (body.empty()) {
        return m.sign < 0 ? "-1" : "1";
    }
    return m.sign < 0 ? "-" + body : body;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool negative = it->coeff < 0;
        const Integer mag = negative ? Integer(-it->coeff) : it->coeff;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const auto mono = superchar::to_string(SignedMonomial{1, it->exp}, *vars_);
        if (it->exp.is_zero()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

LaurentPoly pow(const LaurentPoly &p, unsigned k)
{
    LaurentPoly result(p.vars(), 1);
    LaurentPoly base = p;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1u;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

LaurentPoly multiply_truncated(const LaurentPoly &a, const LaurentPoly &b, std::span<const int> weights,
                               int max_degree)
{
    if (weights.empty()) {
        return a * b;
    }
    return multiply_impl(a, b, weights, max_degree);
}

LaurentPoly truncate_degree(const LaurentPoly &p, std::span<const int> weights, int max_degree)
{
    std::vector<Term> kept;
    for (const auto &t : p.terms()) {
        int d = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            d += weights[i] * t.exp[i];
        }
        if (d <= max_degree) {
            kept.push_back(t);
        }
    }
    return LaurentPoly::from_terms(p.vars(), std::move(kept));
}

LaurentPoly specialize(const LaurentPoly &p, const Substitution &assignment, const VarTablePtr &target)
{
    const auto &src = *p.vars();
    for (const auto &[name, image] : assignment) {
        if (!src.index_of(name)) {
            throw invalid_input("substitution names unknown variable '" + name + "'");
        }
        if (image.sign != 1 && image.sign != -1) {
            throw invalid_input("substitution image for '" + name + "' must carry sign +1 or -1");
        }
    }
    // Image of each source variable; only needed for variables that occur.
    std::vector<std::optional<SignedMonomial>> images(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (const auto it = assignment.find(src.name(i)); it != assignment.end()) {
            images[i] = it->second;
        } else if (const auto idx = target->index_of(src.name(i))) {
            Exponent e;
            e.set(*idx, 1);
            images[i] = SignedMonomial{1, e};
        }
    }
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        Exponent e;
        int sign = 1;
        for (std::size_t i = 0; i < src.size(); ++i) {
            const int k = t.exp[i];
            if (k == 0) {
                continue;
            }
            if (!images[i]) {
                throw invalid_input("variable '" + src.name(i) + "' has no image in the target table");
            }
            e += images[i]->exp.scaled(k);
            if (images[i]->sign < 0 && (k % 2 != 0)) {
                sign = -sign;
            }
        }
        out.push_back({e, sign < 0 ? Integer(-t.coeff) : t.coeff});
    }
    return LaurentPoly::from_terms(target, std::move(out));
}

LaurentPoly specialize(const LaurentPoly &p, const Substitution &assignment)
{
    return specialize(p, assignment, p.vars());
}

LaurentPoly embed(const LaurentPoly &p, const VarTablePtr &target)
{
    if (same_vars(p.vars(), target)) {
        return p.relabeled(target);
    }
    return specialize(p, {}, target);
}

Integer eval_all_ones(const LaurentPoly &p)
{
    Integer sum = 0;
    for (const auto &t : p.terms()) {
        sum += t.coeff;
    }
    return sum;
}

LaurentPoly exact_divide(const LaurentPoly &p, const LaurentPoly &q)
{
    if (q.is_zero()) {
        throw invalid_input("division by the zero polynomial");
    }
    if (!p.is_polynomial() || !q.is_polynomial()) {
        throw invalid_input("exact_divide requires polynomial operands");
    }
    const Term lead = q.leading_term();
    LaurentPoly rem = p;
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term &lt = rem.leading_term();
        const Exponent d = lt.exp - lead.exp;
        if (!d.is_nonnegative()) {
            throw internal_error("polynomial division is not exact");
        }
        Integer c, r;
        boost::multiprecision::divide_qr(lt.coeff, lead.coeff, c, r);
        if (r != 0) {
            throw internal_error("polynomial division is not exact (coefficient)");
        }
        rem -= q.shifted(d) * c;
        quotient.push_back({d, std::move(c)});
    }
    return LaurentPoly::from_terms(p.vars(), std::move(quotient));
}

nlohmann::json to_json(const LaurentPoly &p)
{
    nlohmann::json terms = nlohmann::json::array();
    const auto n = p.vars()->size();
    for (const auto &t : p.terms()) {
        std::vector<int> exp(n);
        for (std::size_t i = 0; i < n; ++i) {
            exp[i] = t.exp[i];
        }
        terms.push_back({{"exp", exp}, {"coeff", t.coeff.str()}});
    }
    return {{"vars", p.vars()->names()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json &j, const VarTablePtr &vars)
{
    try {
        const auto names = j.at("vars").get<std::vector<std::string>>();
        if (names != vars->names()) {
            throw invalid_input("encoded variable names do not match the table");
        }
        std::vector<Term> terms;
        for (const auto &t : j.at("terms")) {
            const auto exp = t.at("exp").get<std::vector<int>>();
            if (exp.size() != names.size()) {
                throw invalid_input("exponent length does not match the variable count");
            }
            Exponent e;
            for (std::size_t i = 0; i < exp.size(); ++i) {
                e.set(i, exp[i]);
            }
            terms.push_back({e, Integer(t.at("coeff").get<std::string>())});
        }
        return LaurentPoly::from_terms(vars, std::move(terms));
    } catch (const nlohmann::json::exception &ex) {
        throw invalid_input(std::string("malformed polynomial JSON: ") + ex.what());
    } catch (const std::runtime_error &ex) {
        throw invalid_input(std::string("malformed polynomial coefficient: ") + ex.what());
    }
}

LaurentPoly poly_from_json(const nlohmann::json &j)
{
    try {
        return poly_from_json(j, make_vars(j.at("vars").get<std::vector<std::string>>()));
    } catch (const nlohmann::json::exception &ex) {
        throw invalid_input(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

} // namespace superchar
