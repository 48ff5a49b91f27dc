#include <superchar/schur.hpp>

#include <atomic>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <superchar/determinant.hpp>
#include <superchar/errors.hpp>

namespace superchar
{

std::string_view to_string(BracketType tag)
{
    switch (tag) {
        case BracketType::plain:
            return "PLAIN";
        case BracketType::square:
            return "SQUARE";
        case BracketType::angle:
            return "ANGLE";
    }
    return "?";
}

BracketType parse_bracket(std::string_view text)
{
    if (text == "PLAIN" || text == "plain") {
        return BracketType::plain;
    }
    if (text == "SQUARE" || text == "square") {
        return BracketType::square;
    }
    if (text == "ANGLE" || text == "angle") {
        return BracketType::angle;
    }
    throw invalid_input("unknown bracket '" + std::string(text) + "' (expected PLAIN, SQUARE or ANGLE)");
}

namespace
{

using HVector = std::vector<LaurentPoly>;
using HPtr = std::shared_ptr<const HVector>;

std::atomic<int> fault_depth{0};

struct HCache {
    std::shared_mutex mutex;
    // key -> longest list computed so far
    std::unordered_map<std::string, HPtr> entries;
};

HCache &h_cache()
{
    static HCache cache;
    return cache;
}

std::string cache_key(const Alphabet &X, const Alphabet &Y)
{
    std::string key;
    for (const auto &n : X.vars()->names()) {
        key += n;
        key += ' ';
    }
    return key + "|" + X.canonical_key() + "|" + Y.canonical_key();
}

HVector compute_h(const Alphabet &X, const Alphabet &Y, int degmax)
{
    const auto &vars = X.vars();
    HVector h(static_cast<std::size_t>(degmax) + 1, LaurentPoly(vars));
    h[0] = LaurentPoly(vars, 1);
    // Multiply by 1/(1 - x t): h[k] += x * h[k-1], ascending in k.
    for (const auto &x : X.elements()) {
        for (std::size_t k = 1; k < h.size(); ++k) {
            h[k] += h[k - 1].shifted(x);
        }
    }
    // Multiply by (1 - y t): h[k] -= y * h[k-1], descending in k.
    for (const auto &y : Y.elements()) {
        for (std::size_t k = h.size() - 1; k >= 1; --k) {
            h[k] -= h[k - 1].shifted(y);
        }
    }
    return h;
}

HPtr h_shared(const Alphabet &X, const Alphabet &Y, int degmax)
{
    if (degmax < 0) {
        throw invalid_input("degmax must be non-negative");
    }
    if (!same_vars(X.vars(), Y.vars())) {
        throw invalid_input("X and Y must share a variable table");
    }
    if (fault_depth.load() > 0) {
        auto h = compute_h(X, Y, degmax);
        if (h.size() > 2) {
            h[2] += LaurentPoly(X.vars(), 1);
        }
        return std::make_shared<const HVector>(std::move(h));
    }
    auto &cache = h_cache();
    const auto key = cache_key(X, Y);
    {
        std::shared_lock lock(cache.mutex);
        if (const auto it = cache.entries.find(key);
            it != cache.entries.end() && static_cast<int>(it->second->size()) > degmax) {
            const auto &full = *it->second;
            if (static_cast<int>(full.size()) == degmax + 1) {
                return it->second;
            }
            return std::make_shared<const HVector>(full.begin(), full.begin() + degmax + 1);
        }
    }
    auto computed = std::make_shared<const HVector>(compute_h(X, Y, degmax));
    std::unique_lock lock(cache.mutex);
    auto &slot = cache.entries[key];
    if (!slot || slot->size() < computed->size()) {
        slot = computed;
    }
    return computed;
}

} // namespace

std::vector<LaurentPoly> h_list(const Alphabet &X, const Alphabet &Y, int degmax)
{
    return *h_shared(X, Y, degmax);
}

CompleteFunctions::CompleteFunctions(const Alphabet &X, const Alphabet &Y, int degmax)
    : h_(h_shared(X, Y, degmax)), zero_(X.vars())
{
}

const LaurentPoly &CompleteFunctions::operator()(int k) const
{
    if (k < 0) {
        return zero_;
    }
    if (k > degmax()) {
        throw invalid_input("h_" + std::to_string(k) + " requested beyond degmax " + std::to_string(degmax()));
    }
    return (*h_)[static_cast<std::size_t>(k)];
}

int jt_degree(const Partition &lambda)
{
    return lambda.empty() ? 0 : lambda[0] + static_cast<int>(lambda.length());
}

namespace
{

template <class Entry>
LaurentPoly det_of(const VarTablePtr &vars, std::size_t n, Entry entry)
{
    Matrix<LaurentPoly> m(n, LaurentPoly(vars));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = entry(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }
    return determinant(m, LaurentPoly(vars, 1), [](const LaurentPoly &p) { return p.is_zero(); });
}

int row(const Partition &lambda, int i)
{
    return lambda[static_cast<std::size_t>(i - 1)];
}

} // namespace

LaurentPoly super_schur(const Partition &lambda, const CompleteFunctions &h)
{
    return det_of(h.vars(), lambda.length(), [&](int i, int j) { return h(row(lambda, i) - i + j); });
}

LaurentPoly super_schur(const Partition &lambda, const Alphabet &X, const Alphabet &Y)
{
    return super_schur(lambda, CompleteFunctions(X, Y, jt_degree(lambda)));
}

LaurentPoly bracket_schur(BracketType tag, const Partition &lambda, const CompleteFunctions &h)
{
    const auto n = lambda.length();
    switch (tag) {
        case BracketType::plain:
            return super_schur(lambda, h);
        case BracketType::square:
            return det_of(h.vars(), n, [&](int i, int j) {
                const int k = row(lambda, i) - i;
                return h(k + j) - h(k - j);
            });
        case BracketType::angle: {
            if (n == 0) {
                return LaurentPoly(h.vars(), 1);
            }
            const auto d = det_of(h.vars(), n, [&](int i, int j) {
                const int k = row(lambda, i) - i;
                return h(k + j) + h(k - j + 2);
            });
            return d.divided_exactly(2);
        }
    }
    throw invalid_input("unknown bracket type");
}

LaurentPoly bracket_schur(BracketType tag, const Partition &lambda, const Alphabet &X, const Alphabet &Y)
{
    return bracket_schur(tag, lambda, CompleteFunctions(X, Y, jt_degree(lambda)));
}

LaurentPoly bracket_schur_altform(BracketType tag, const Partition &lambda, const CompleteFunctions &h)
{
    // The block forms are sized by the first column of the diagram.
    const auto n = static_cast<std::size_t>(lambda.conjugate()[0]);
    const auto H = [&](int m) { return h(m) - h(m - 2); };
    switch (tag) {
        case BracketType::square:
            return det_of(h.vars(), n, [&](int i, int j) {
                const int k = row(lambda, i) - i;
                return j == 1 ? H(k + 1) : H(k + j) + H(k - j + 2);
            });
        case BracketType::angle:
            return det_of(h.vars(), n, [&](int i, int j) {
                const int k = row(lambda, i) - i;
                return j == 1 ? h(k + 1) : h(k + j) + h(k - j + 2);
            });
        case BracketType::plain:
            break;
    }
    throw invalid_input("the alternate forms exist only for SQUARE and ANGLE");
}

LaurentPoly bracket_schur_altform(BracketType tag, const Partition &lambda, const Alphabet &X, const Alphabet &Y)
{
    return bracket_schur_altform(tag, lambda, CompleteFunctions(X, Y, jt_degree(lambda)));
}

LaurentPoly square_bracket_halved_form(const Partition &lambda, const CompleteFunctions &h)
{
    const auto n = static_cast<std::size_t>(lambda.conjugate()[0]);
    if (n == 0) {
        return LaurentPoly(h.vars(), 1);
    }
    const auto H = [&](int m) { return h(m) - h(m - 2); };
    const auto d = det_of(h.vars(), n, [&](int i, int j) {
        const int k = row(lambda, i) - i;
        return H(k + j) + H(k - j + 2);
    });
    return d.divided_exactly(2);
}

// ---------------------------------------------------------------- bialternant

namespace
{

VarTablePtr t_table(int n)
{
    static std::mutex mutex;
    static std::map<int, VarTablePtr> tables;
    std::lock_guard lock(mutex);
    auto &slot = tables[n];
    if (!slot) {
        slot = make_indexed_vars("t", static_cast<std::size_t>(n));
    }
    return slot;
}

LaurentPoly t_power(const VarTablePtr &vars, int i, int e)
{
    Exponent x;
    x.set(static_cast<std::size_t>(i), e);
    return LaurentPoly::monomial(vars, x);
}

} // namespace

LaurentPoly vandermonde(int n)
{
    if (n < 0) {
        throw invalid_input("vandermonde requires n >= 0");
    }
    const auto vars = t_table(n);
    LaurentPoly out(vars, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out *= t_power(vars, i, 1) - t_power(vars, j, 1);
        }
    }
    return out;
}

LaurentPoly bialternant_schur(const Partition &lambda, int n)
{
    if (n < static_cast<int>(lambda.length())) {
        throw invalid_input("bialternant_schur needs n >= length(lambda) (n=" + std::to_string(n)
                            + ", length=" + std::to_string(lambda.length()) + ")");
    }
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, LaurentPoly> memo;
    {
        std::lock_guard lock(mutex);
        if (const auto it = memo.find({lambda, n}); it != memo.end()) {
            return it->second;
        }
    }
    const auto vars = t_table(n);
    const auto numerator = det_of(vars, static_cast<std::size_t>(n), [&](int i, int j) {
        return t_power(vars, i - 1, row(lambda, j) + n - j);
    });
    auto result = exact_divide(numerator, vandermonde(n));
    std::lock_guard lock(mutex);
    memo.emplace(std::make_pair(lambda, n), result);
    return result;
}

std::map<Partition, Integer> schur_expand(const LaurentPoly &p, int n)
{
    if (n < 0 || static_cast<int>(p.vars()->size()) != n) {
        throw invalid_input("schur_expand: polynomial must live over exactly n variables");
    }
    std::map<Partition, Integer> out;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        const Term lead = rest.leading_term();
        std::vector<int> parts(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            parts[static_cast<std::size_t>(i)] = lead.exp[static_cast<std::size_t>(i)];
            if (parts[static_cast<std::size_t>(i)] < 0
                || (i > 0 && parts[static_cast<std::size_t>(i)] > parts[static_cast<std::size_t>(i - 1)])) {
                throw invalid_input("schur_expand: input is not a symmetric polynomial");
            }
        }
        Partition lambda(std::move(parts));
        rest -= bialternant_schur(lambda, n).relabeled(p.vars()) * lead.coeff;
        out[lambda] += lead.coeff;
    }
    return out;
}

// ---------------------------------------------------------------- cache

void clear_h_cache()
{
    auto &cache = h_cache();
    std::unique_lock lock(cache.mutex);
    cache.entries.clear();
}

std::size_t h_cache_size()
{
    auto &cache = h_cache();
    std::shared_lock lock(cache.mutex);
    return cache.entries.size();
}

void save_h_cache(const std::filesystem::path &file)
{
    nlohmann::json j = nlohmann::json::array();
    {
        auto &cache = h_cache();
        std::shared_lock lock(cache.mutex);
        std::map<std::string, HPtr> sorted(cache.entries.begin(), cache.entries.end());
        for (const auto &[key, h] : sorted) {
            nlohmann::json polys = nlohmann::json::array();
            for (const auto &p : *h) {
                polys.push_back(to_json(p));
            }
            j.push_back({{"key", key}, {"h", std::move(polys)}});
        }
    }
    std::ofstream out(file);
    if (!out) {
        throw invalid_input("cannot write h-series cache to " + file.string());
    }
    out << j.dump() << '\n';
}

void load_h_cache(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in) {
        return;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &ex) {
        throw invalid_input("corrupt h-series cache " + file.string() + ": " + ex.what());
    }
    auto &cache = h_cache();
    std::unique_lock lock(cache.mutex);
    for (const auto &entry : j) {
        const auto key = entry.at("key").get<std::string>();
        HVector h;
        VarTablePtr vars;
        for (const auto &pj : entry.at("h")) {
            if (!vars) {
                vars = make_vars(pj.at("vars").get<std::vector<std::string>>());
            }
            h.push_back(poly_from_json(pj, vars));
        }
        auto &slot = cache.entries[key];
        if (!slot || slot->size() < h.size()) {
            slot = std::make_shared<const HVector>(std::move(h));
        }
    }
}

ScopedHListFault::ScopedHListFault()
{
    ++fault_depth;
}

ScopedHListFault::~ScopedHListFault()
{
    --fault_depth;
}

} // namespace superchar
