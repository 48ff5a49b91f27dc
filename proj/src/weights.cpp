#include <superchar/weights.hpp>

#include <charconv>

#include <superchar/errors.hpp>

namespace superchar
{

namespace
{

bool is_integer(const Rational &x)
{
    return denominator(x) == 1;
}

bool is_nonneg_integer(const Rational &x)
{
    return is_integer(x) && x >= 0;
}

} // namespace

AlgebraFamily AlgebraFamily::gl(int M, int N)
{
    return {FamilyKind::gl, M, N};
}
AlgebraFamily AlgebraFamily::b(int r, int s)
{
    return {FamilyKind::b, r, s};
}
AlgebraFamily AlgebraFamily::b0(int s)
{
    return {FamilyKind::b0, 0, s};
}
AlgebraFamily AlgebraFamily::c(int s)
{
    return {FamilyKind::c, 1, s};
}
AlgebraFamily AlgebraFamily::d_plus(int r, int s)
{
    return {FamilyKind::d_plus, r, s};
}
AlgebraFamily AlgebraFamily::d_minus(int r, int s)
{
    return {FamilyKind::d_minus, r, s};
}

int AlgebraFamily::rank() const
{
    switch (kind) {
        case FamilyKind::gl:
            return p + q - 1;
        case FamilyKind::b0:
            return q;
        case FamilyKind::c:
            return q + 1;
        default:
            return p + q;
    }
}

int AlgebraFamily::weight_length() const
{
    switch (kind) {
        case FamilyKind::gl:
            return p + q;
        case FamilyKind::b0:
            return q;
        case FamilyKind::c:
            return q + 1;
        default:
            return p + q;
    }
}

std::pair<int, int> AlgebraFamily::hook() const
{
    return {p, q};
}

std::string AlgebraFamily::name() const
{
    const auto pq = std::to_string(p) + "," + std::to_string(q);
    switch (kind) {
        case FamilyKind::gl:
            return "GL(" + pq + ")";
        case FamilyKind::b:
            return "B(" + pq + ")";
        case FamilyKind::b0:
            return "B0(" + std::to_string(q) + ")";
        case FamilyKind::c:
            return "C(" + std::to_string(q + 1) + ")";
        case FamilyKind::d_plus:
            return "D_PLUS(" + pq + ")";
        case FamilyKind::d_minus:
            return "D_MINUS(" + pq + ")";
    }
    return "?";
}

void validate(const AlgebraFamily &f)
{
    if (f.p < 0 || f.q < 0) {
        throw invalid_input(f.name() + ": parameters must be non-negative");
    }
    switch (f.kind) {
        case FamilyKind::gl:
            if (f.p + f.q < 1) {
                throw invalid_input("GL requires M + N >= 1");
            }
            return;
        case FamilyKind::b:
            if (f.p < 1) {
                throw invalid_input("B requires r >= 1 (use B0 for r = 0)");
            }
            return;
        case FamilyKind::b0:
        case FamilyKind::c:
            if (f.q < 1) {
                throw invalid_input(f.name() + " requires s >= 1");
            }
            if (f.p != (f.kind == FamilyKind::c ? 1 : 0)) {
                throw invalid_input(f.name() + ": inconsistent parameters");
            }
            return;
        case FamilyKind::d_plus:
        case FamilyKind::d_minus:
            if (f.p < 2) {
                throw invalid_input("D families require r >= 2");
            }
            return;
    }
}

FamilyKind parse_family_kind(std::string_view text)
{
    if (text == "GL") {
        return FamilyKind::gl;
    }
    if (text == "B") {
        return FamilyKind::b;
    }
    if (text == "B0") {
        return FamilyKind::b0;
    }
    if (text == "C") {
        return FamilyKind::c;
    }
    if (text == "DPLUS" || text == "D_PLUS") {
        return FamilyKind::d_plus;
    }
    if (text == "DMINUS" || text == "D_MINUS") {
        return FamilyKind::d_minus;
    }
    throw invalid_input("unknown family '" + std::string(text) + "' (expected GL, B, B0, C, DPLUS or DMINUS)");
}

AlgebraFamily parse_family(std::string_view text)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')') {
        throw invalid_input("malformed family '" + std::string(text) + "' (expected e.g. GL(2,1) or B0(2))");
    }
    const auto kind = parse_family_kind(text.substr(0, open));
    const auto inner = text.substr(open + 1, text.size() - open - 2);
    std::vector<int> args;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        const auto comma = std::min(inner.find(',', pos), inner.size());
        const auto token = inner.substr(pos, comma - pos);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw invalid_input("malformed family parameter '" + std::string(token) + "' in '" + std::string(text)
                                + "'");
        }
        args.push_back(v);
        pos = comma + 1;
    }
    const bool one_arg = kind == FamilyKind::b0 || kind == FamilyKind::c;
    if (args.size() != (one_arg ? 1U : 2U)) {
        throw invalid_input(std::string(to_string(kind)) + " takes " + (one_arg ? "one parameter" : "two parameters"));
    }
    AlgebraFamily f{kind, 0, 0};
    switch (kind) {
        case FamilyKind::b0:
            f = AlgebraFamily::b0(args[0]);
            break;
        case FamilyKind::c:
            f = AlgebraFamily::c(args[0] - 1);
            break;
        default:
            f = {kind, args[0], args[1]};
            break;
    }
    validate(f);
    return f;
}

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
        case FamilyKind::gl:
            return "GL";
        case FamilyKind::b:
            return "B";
        case FamilyKind::b0:
            return "B0";
        case FamilyKind::c:
            return "C";
        case FamilyKind::d_plus:
            return "D_PLUS";
        case FamilyKind::d_minus:
            return "D_MINUS";
    }
    return "?";
}

HighestWeight hw_from_diagram(const AlgebraFamily &f, const Partition &lambda)
{
    validate(f);
    const auto [M, N] = f.hook();
    const auto row = [&](int j) { return lambda[static_cast<std::size_t>(j - 1)]; };
    if (!in_hook(lambda, M, N)) {
        throw invalid_input(f.name() + ": " + lambda.to_string() + " is outside the [" + std::to_string(M) + ","
                            + std::to_string(N) + "]-hook: row " + std::to_string(M + 1) + " has length "
                            + std::to_string(row(M + 1)) + " > " + std::to_string(N));
    }
    const auto conj = lambda.conjugate();
    const auto col = [&](int j) { return conj[static_cast<std::size_t>(j - 1)]; };
    std::vector<Rational> w;
    switch (f.kind) {
        case FamilyKind::gl:
            for (int j = 1; j <= M; ++j) {
                w.emplace_back(row(j));
            }
            for (int j = 1; j <= N; ++j) {
                w.emplace_back(std::max(col(j) - M, 0));
            }
            break;
        case FamilyKind::b:
        case FamilyKind::b0:
        case FamilyKind::d_plus:
        case FamilyKind::d_minus: {
            const int r = f.p, s = f.q;
            for (int j = 1; j <= s; ++j) {
                w.emplace_back(col(j));
            }
            for (int j = 1; j <= r; ++j) {
                w.emplace_back(std::max(row(j) - s, 0));
            }
            if (f.kind == FamilyKind::d_minus) {
                w.back() = -w.back();
            }
            break;
        }
        case FamilyKind::c:
            w.emplace_back(row(1));
            for (int j = 1; j <= f.q; ++j) {
                w.emplace_back(std::max(col(j) - 1, 0));
            }
            break;
    }
    return {std::move(w)};
}

KacDynkinLabels kd_labels(const AlgebraFamily &f, const HighestWeight &w)
{
    validate(f);
    if (static_cast<int>(w.coords.size()) != f.weight_length()) {
        throw invalid_input(f.name() + ": expected " + std::to_string(f.weight_length()) + " weight coordinates, got "
                            + std::to_string(w.coords.size()));
    }
    const auto L = [&](int j) -> const Rational & { return w.coords[static_cast<std::size_t>(j - 1)]; };
    const int n = f.rank();
    std::vector<Rational> b;
    for (int j = 1; j <= n; ++j) {
        Rational v;
        switch (f.kind) {
            case FamilyKind::gl:
                v = j == f.p ? Rational(L(j) + L(j + 1)) : Rational(L(j) - L(j + 1));
                break;
            case FamilyKind::b:
                if (j == n) {
                    v = 2 * L(j);
                } else if (j == f.q) {
                    v = L(j) + L(j + 1);
                } else {
                    v = L(j) - L(j + 1);
                }
                break;
            case FamilyKind::b0:
                v = j == n ? Rational(2 * L(j)) : Rational(L(j) - L(j + 1));
                break;
            case FamilyKind::c:
                if (j == 1) {
                    v = L(1) + L(2);
                } else if (j == n) {
                    v = L(j);
                } else {
                    v = L(j) - L(j + 1);
                }
                break;
            case FamilyKind::d_plus:
            case FamilyKind::d_minus:
                if (j == n) {
                    v = L(j - 1) + L(j);
                } else if (j == f.q) {
                    v = L(j) + L(j + 1);
                } else {
                    v = L(j) - L(j + 1);
                }
                break;
        }
        b.push_back(v);
    }
    return {std::move(b)};
}

bool is_finite_dimensional(const AlgebraFamily &f, const KacDynkinLabels &labels)
{
    validate(f);
    const int n = f.rank();
    if (static_cast<int>(labels.b.size()) != n) {
        throw invalid_input(f.name() + ": expected " + std::to_string(n) + " labels, got "
                            + std::to_string(labels.b.size()));
    }
    const auto b = [&](int j) -> const Rational & { return labels.b[static_cast<std::size_t>(j - 1)]; };
    // The node excluded from the plain non-negativity requirement (0 if none).
    int special = 0;
    switch (f.kind) {
        case FamilyKind::gl:
            special = (f.p >= 1 && f.q >= 1) ? f.p : 0;
            break;
        case FamilyKind::b:
        case FamilyKind::d_plus:
        case FamilyKind::d_minus:
            special = f.q;
            break;
        case FamilyKind::b0:
            special = f.q;
            break;
        case FamilyKind::c:
            special = 1;
            break;
    }
    for (int j = 1; j <= n; ++j) {
        if (j != special && !is_nonneg_integer(b(j))) {
            return false;
        }
    }
    switch (f.kind) {
        case FamilyKind::gl:
        case FamilyKind::c:
            return true;
        case FamilyKind::b0:
            return is_nonneg_integer(b(n) / 2);
        case FamilyKind::b: {
            const int r = f.p, s = f.q;
            Rational c = s >= 1 ? b(s) : Rational(0);
            for (int j = s + 1; j <= r + s - 1; ++j) {
                c -= b(j);
            }
            c -= b(r + s) / 2;
            if (s == 0) {
                // No odd node: only the integrality of the spin node remains.
                return is_integer(b(r) / 2);
            }
            if (!is_nonneg_integer(c)) {
                return false;
            }
            if (c < r) {
                const int ci = numerator(c).convert_to<int>();
                for (int j = s + ci + 1; j <= r + s; ++j) {
                    if (b(j) != 0) {
                        return false;
                    }
                }
            }
            return true;
        }
        case FamilyKind::d_plus:
        case FamilyKind::d_minus: {
            const int r = f.p, s = f.q;
            if (s == 0) {
                return is_integer((b(r - 1) + b(r)) / 2);
            }
            Rational c = b(s);
            for (int j = s + 1; j <= r + s - 2; ++j) {
                c -= b(j);
            }
            c -= (b(r + s - 1) + b(r + s)) / 2;
            if (!is_nonneg_integer(c)) {
                return false;
            }
            const int ci = numerator(c).convert_to<int>();
            if (ci < r - 1) {
                for (int j = s + ci + 1; j <= r + s; ++j) {
                    if (b(j) != 0) {
                        return false;
                    }
                }
            }
            if (ci == r - 1 && b(r + s - 1) != b(r + s)) {
                return false;
            }
            return true;
        }
    }
    return false;
}

std::string to_string(const Rational &x)
{
    if (is_integer(x)) {
        return numerator(x).str();
    }
    return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text)
{
    const auto parse_int = [&](std::string_view t) {
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
            throw invalid_input("malformed number '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw invalid_input("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash))) / den;
}

nlohmann::json to_json(const Rational &x)
{
    if (is_integer(x) && boost::multiprecision::abs(numerator(x)) < (boost::multiprecision::cpp_int(1) << 53)) {
        return numerator(x).convert_to<long long>();
    }
    return to_string(x);
}

} // namespace superchar
