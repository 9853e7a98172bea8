#include "commlab/algebra/free_product.hpp"

#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace commlab::algebra {

FreeProductGroup::FreeProductGroup(std::vector<Factor> factors) : factors_(std::move(factors))
{
    if (factors_.empty()) {
        throw std::invalid_argument("FreeProductGroup: no factors");
    }
    std::set<std::string> names;
    for (const auto& f : factors_) {
        if (f.name.empty() || f.name.find_first_of(" :^") != std::string::npos || !names.insert(f.name).second) {
            throw std::invalid_argument("FreeProductGroup: bad or duplicate factor name '" + f.name + "'");
        }
    }
}

bool FreeProductGroup::is_identity_value(std::uint32_t factor, std::int64_t v) const
{
    const Factor& f = factors_.at(factor);
    return f.is_cyclic() ? v == 0 : static_cast<std::size_t>(v) == f.finite->identity();
}

std::int64_t FreeProductGroup::combine(std::uint32_t factor, std::int32_t a, std::int32_t b) const
{
    const Factor& f = factors_[factor];
    if (f.is_cyclic()) {
        return static_cast<std::int64_t>(a) + b;
    }
    return static_cast<std::int64_t>(f.finite->multiply(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
}

GroupWord FreeProductGroup::letter(std::uint32_t factor, std::int64_t value) const
{
    const Factor& f = factors_.at(factor);
    if (!f.is_cyclic() && (value < 0 || static_cast<std::size_t>(value) >= f.finite->order())) {
        throw std::invalid_argument("FreeProductGroup::letter: element outside factor " + f.name);
    }
    if (value > std::numeric_limits<std::int32_t>::max() || value < std::numeric_limits<std::int32_t>::min()) {
        throw std::overflow_error("FreeProductGroup::letter: exponent out of range");
    }
    if (is_identity_value(factor, value)) {
        return {};
    }
    return {Letter{factor, static_cast<std::int32_t>(value)}};
}

void FreeProductGroup::multiply_into(GroupWord& a, const GroupWord& b) const
{
    std::size_t i = 0;
    while (i < b.size() && !a.empty() && a.back().factor == b[i].factor) {
        const std::int64_t v = combine(b[i].factor, a.back().value, b[i].value);
        if (is_identity_value(b[i].factor, v)) {
            a.pop_back();
            ++i;
            continue;
        }
        if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
            throw std::overflow_error("FreeProductGroup: exponent out of range");
        }
        a.back().value = static_cast<std::int32_t>(v);
        ++i;
        break;
    }
    a.insert(a.end(), b.begin() + static_cast<std::ptrdiff_t>(i), b.end());
}

GroupWord FreeProductGroup::multiply(const GroupWord& a, const GroupWord& b) const
{
    GroupWord out;
    out.reserve(a.size() + b.size());
    out = a;
    multiply_into(out, b);
    return out;
}

GroupWord FreeProductGroup::inverse(const GroupWord& w) const
{
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Factor& f = factors_[it->factor];
        const std::int32_t v = f.is_cyclic() ? -it->value
                                             : static_cast<std::int32_t>(f.finite->inverse(static_cast<std::size_t>(it->value)));
        out.push_back({it->factor, v});
    }
    return out;
}

bool FreeProductGroup::is_normal_form(const GroupWord& w) const
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].factor >= factors_.size() || is_identity_value(w[i].factor, w[i].value)) {
            return false;
        }
        if (i > 0 && w[i - 1].factor == w[i].factor) {
            return false;
        }
    }
    return true;
}

std::string FreeProductGroup::format(const GroupWord& w) const
{
    if (w.empty()) {
        return "1";
    }
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) {
            s += ' ';
        }
        const Factor& f = factors_[l.factor];
        s += f.name;
        if (f.is_cyclic()) {
            if (l.value != 1) {
                s += '^' + std::to_string(l.value);
            }
        } else {
            s += ':' + f.finite->label(static_cast<std::size_t>(l.value));
        }
    }
    return s;
}

GroupWord FreeProductGroup::parse(std::string_view literal) const
{
    std::istringstream in{std::string(literal)};
    std::string tok;
    GroupWord w;
    while (in >> tok) {
        if (tok == "1") {
            continue;
        }
        const auto colon = tok.find(':');
        const auto caret = tok.find('^');
        const std::string name = tok.substr(0, std::min(colon, caret));
        std::uint32_t idx = 0;
        while (idx < factors_.size() && factors_[idx].name != name) {
            ++idx;
        }
        if (idx == factors_.size()) {
            throw std::invalid_argument("GroupWord parse: unknown factor '" + name + "'");
        }
        const Factor& f = factors_[idx];
        std::int64_t value = 1;
        if (f.is_cyclic()) {
            if (colon != std::string::npos) {
                throw std::invalid_argument("GroupWord parse: cyclic factor takes '^', got '" + tok + "'");
            }
            if (caret != std::string::npos) {
                char* end = nullptr;
                value = std::strtoll(tok.c_str() + caret + 1, &end, 10);
                if (*end != '\0' || caret + 1 == tok.size()) {
                    throw std::invalid_argument("GroupWord parse: bad exponent in '" + tok + "'");
                }
            }
        } else {
            if (colon == std::string::npos) {
                throw std::invalid_argument("GroupWord parse: finite factor needs ':label' in '" + tok + "'");
            }
            auto el = f.finite->find(tok.substr(colon + 1));
            if (!el) {
                throw std::invalid_argument("GroupWord parse: unknown label in '" + tok + "'");
            }
            value = static_cast<std::int64_t>(*el);
        }
        multiply_into(w, letter(idx, value));
    }
    return w;
}

FreeProductPtr z2_star_z2()
{
    static const FreeProductPtr g = std::make_shared<const FreeProductGroup>(
        std::vector<Factor>{{"a", words::groups::cyclic(2)}, {"b", words::groups::cyclic(2)}});
    return g;
}

FreeProductPtr z2_star_z()
{
    static const FreeProductPtr g = std::make_shared<const FreeProductGroup>(
        std::vector<Factor>{{"s", words::groups::cyclic(2)}, {"v", nullptr}});
    return g;
}

FreeProductPtr free_group_f2()
{
    static const FreeProductPtr g =
        std::make_shared<const FreeProductGroup>(std::vector<Factor>{{"x", nullptr}, {"y", nullptr}});
    return g;
}

} // namespace commlab::algebra
