#include <superchar/alphabet.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

#include <superchar/errors.hpp>

namespace superchar
{

Alphabet::Alphabet(VarTablePtr vars, std::vector<SignedMonomial> elements)
    : vars_(std::move(vars)), elements_(std::move(elements))
{
    if (!vars_) {
        throw invalid_input("alphabet requires a variable table");
    }
    for (const auto &e : elements_) {
        if (e.sign != 1 && e.sign != -1) {
            throw invalid_input("alphabet elements must carry sign +1 or -1");
        }
        for (std::size_t i = vars_->size(); i < max_vars; ++i) {
            if (e.exp[i] != 0) {
                throw invalid_input("alphabet element uses a slot outside its variable table");
            }
        }
    }
}

Alphabet Alphabet::of(VarTablePtr vars, const std::vector<std::string> &names)
{
    std::vector<SignedMonomial> els;
    for (const auto &n : names) {
        const auto idx = vars->index_of(n);
        if (!idx) {
            throw invalid_input("unknown variable '" + n + "'");
        }
        SignedMonomial m;
        m.exp.set(*idx, 1);
        els.push_back(m);
    }
    return Alphabet(std::move(vars), std::move(els));
}

Alphabet Alphabet::with_prefix(VarTablePtr vars, std::string_view prefix)
{
    std::vector<std::string> names;
    for (const auto &n : vars->names()) {
        if (n.starts_with(prefix)) {
            names.push_back(n);
        }
    }
    return of(std::move(vars), names);
}

Alphabet Alphabet::constants(VarTablePtr vars, std::initializer_list<int> signs)
{
    std::vector<SignedMonomial> els;
    for (const int s : signs) {
        els.push_back({s, Exponent{}});
    }
    return Alphabet(std::move(vars), std::move(els));
}

Alphabet Alphabet::operator+(const Alphabet &o) const
{
    if (!same_vars(vars_, o.vars_)) {
        throw invalid_input("alphabets over different variable tables");
    }
    auto els = elements_;
    els.insert(els.end(), o.elements_.begin(), o.elements_.end());
    return Alphabet(vars_, std::move(els));
}

Alphabet Alphabet::with(const SignedMonomial &m) const
{
    auto els = elements_;
    els.push_back(m);
    return Alphabet(vars_, std::move(els));
}

Alphabet Alphabet::inverse() const
{
    std::vector<SignedMonomial> els;
    els.reserve(elements_.size());
    for (const auto &e : elements_) {
        els.push_back(e.inverse());
    }
    return Alphabet(vars_, std::move(els));
}

Alphabet Alphabet::negated() const
{
    auto els = elements_;
    for (auto &e : els) {
        e.sign = -e.sign;
    }
    return Alphabet(vars_, std::move(els));
}

Alphabet Alphabet::relabeled(VarTablePtr vars) const
{
    if (!vars || vars->size() != vars_->size()) {
        throw invalid_input("relabel requires a table of the same size");
    }
    return Alphabet(std::move(vars), elements_);
}

std::string Alphabet::canonical_key() const
{
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    std::string key = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0) {
            key += ",";
        }
        key += superchar::to_string(sorted[i], *vars_);
    }
    return key + "}";
}

std::string Alphabet::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += superchar::to_string(elements_[i], *vars_);
    }
    return out + "}";
}

LaurentPoly Alphabet::power_sum() const
{
    std::vector<Term> terms;
    for (const auto &e : elements_) {
        terms.push_back({e.exp, Integer(e.sign)});
    }
    return LaurentPoly::from_terms(vars_, std::move(terms));
}

bool operator==(const Alphabet &a, const Alphabet &b)
{
    return same_vars(a.vars_, b.vars_) && a.elements_ == b.elements_;
}

namespace
{

struct ParsedElement {
    int sign = 1;
    std::string name; // empty for the constant
    int power = 1;
};

std::vector<ParsedElement> parse_elements(std::string_view text)
{
    std::vector<ParsedElement> out;
    if (text.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const std::string original(token);
        ParsedElement el;
        if (token.starts_with('-')) {
            el.sign = -1;
            token.remove_prefix(1);
        }
        if (token == "1") {
            el.power = 0;
        } else {
            const auto caret = token.find('^');
            el.name = std::string(token.substr(0, caret));
            const bool name_ok = !el.name.empty() && std::isalpha(static_cast<unsigned char>(el.name[0]))
                                 && std::all_of(el.name.begin(), el.name.end(), [](char c) {
                                        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                                    });
            if (!name_ok) {
                throw invalid_input("malformed alphabet element '" + original + "'");
            }
            if (caret != std::string_view::npos) {
                const auto exp = token.substr(caret + 1);
                const auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), el.power);
                if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size()) {
                    throw invalid_input("malformed exponent in alphabet element '" + original + "'");
                }
            }
        }
        out.push_back(std::move(el));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

} // namespace

std::vector<std::string> alphabet_variable_names(std::string_view text)
{
    std::vector<std::string> names;
    for (const auto &el : parse_elements(text)) {
        if (!el.name.empty() && std::find(names.begin(), names.end(), el.name) == names.end()) {
            names.push_back(el.name);
        }
    }
    return names;
}

Alphabet parse_alphabet(std::string_view text, const VarTablePtr &vars)
{
    std::vector<SignedMonomial> els;
    for (const auto &el : parse_elements(text)) {
        SignedMonomial m{el.sign, Exponent{}};
        if (!el.name.empty()) {
            const auto idx = vars->index_of(el.name);
            if (!idx) {
                throw invalid_input("unknown variable '" + el.name + "' in alphabet");
            }
            m.exp.set(*idx, el.power);
        }
        els.push_back(m);
    }
    return Alphabet(vars, std::move(els));
}

} // namespace superchar
