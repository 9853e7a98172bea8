#include "commlab/words/mixed_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace commlab::words {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

MixedWord::MixedWord(FiniteGroupPtr group, std::span<const MixedToken> tokens) : group_(std::move(group))
{
    if (!group_) {
        throw std::invalid_argument("MixedWord: null group");
    }
    const FiniteGroup& g = *group_;
    coeff_.push_back(g.identity());
    for (const auto& tok : tokens) {
        if (const auto* el = std::get_if<FiniteGroup::Element>(&tok)) {
            if (*el >= g.order()) {
                throw std::invalid_argument("MixedWord: coefficient outside the group");
            }
            coeff_.back() = g.multiply(coeff_.back(), *el);
            continue;
        }
        const std::int64_t e = std::get<TPower>(tok).exp;
        if (e == 0) {
            continue;
        }
        if (!exps_.empty() && coeff_.back() == g.identity()) {
            coeff_.pop_back();
            exps_.back() += e;
            if (exps_.back() == 0) {
                exps_.pop_back();
            } else {
                coeff_.push_back(g.identity());
            }
        } else {
            exps_.push_back(e);
            coeff_.push_back(g.identity());
        }
    }
}

MixedWord MixedWord::identity(FiniteGroupPtr group)
{
    return MixedWord(std::move(group), std::span<const MixedToken>{});
}

MixedWord MixedWord::variable(FiniteGroupPtr group, std::int64_t exp)
{
    const MixedToken t = TPower{exp};
    return MixedWord(std::move(group), std::span<const MixedToken>(&t, 1));
}

MixedWord MixedWord::constant(FiniteGroupPtr group, FiniteGroup::Element el)
{
    const MixedToken t = el;
    return MixedWord(std::move(group), std::span<const MixedToken>(&t, 1));
}

MixedWord MixedWord::parse(FiniteGroupPtr group, std::string_view literal)
{
    if (!group) {
        throw std::invalid_argument("MixedWord::parse: null group");
    }
    std::vector<MixedToken> toks;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        const auto dot = literal.find('.', pos);
        const auto piece = trim(literal.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
        pos = dot == std::string_view::npos ? literal.size() + 1 : dot + 1;
        if (piece.empty()) {
            throw std::invalid_argument("MixedWord::parse: empty token in '" + std::string(literal) + "'");
        }
        if (piece == "t") {
            toks.emplace_back(TPower{1});
        } else if (piece.rfind("t^", 0) == 0) {
            const std::string num = piece.substr(2);
            char* end = nullptr;
            const long long e = std::strtoll(num.c_str(), &end, 10);
            if (num.empty() || *end != '\0') {
                throw std::invalid_argument("MixedWord::parse: bad exponent in '" + piece + "'");
            }
            toks.emplace_back(TPower{e});
        } else if (auto el = group->find(piece)) {
            toks.emplace_back(*el);
        } else {
            throw std::invalid_argument("MixedWord::parse: unknown label '" + piece + "'");
        }
    }
    return MixedWord(std::move(group), toks);
}

std::string MixedWord::to_string() const
{
    const FiniteGroup& g = *group_;
    std::string s;
    auto append = [&s](const std::string& piece) {
        if (!s.empty()) {
            s += " . ";
        }
        s += piece;
    };
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] != g.identity()) {
            append(g.label(coeff_[i]));
        }
        if (i < exps_.size()) {
            append(exps_[i] == 1 ? std::string("t") : "t^" + std::to_string(exps_[i]));
        }
    }
    return s.empty() ? g.label(g.identity()) : s;
}

std::int64_t MixedWord::t_length() const
{
    std::int64_t n = 0;
    for (auto e : exps_) {
        n += std::llabs(e);
    }
    return n;
}

bool MixedWord::is_trivial() const
{
    return exps_.empty() && coeff_.front() == group_->identity();
}

FiniteGroup::Element MixedWord::evaluate(FiniteGroup::Element t) const
{
    const FiniteGroup& g = *group_;
    if (t >= g.order()) {
        throw std::invalid_argument("MixedWord::evaluate: element outside the group");
    }
    FiniteGroup::Element acc = coeff_.front();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        acc = g.multiply(g.multiply(acc, g.power(t, exps_[i])), coeff_[i + 1]);
    }
    return acc;
}

std::vector<MixedToken> MixedWord::tokens() const
{
    std::vector<MixedToken> out;
    out.reserve(coeff_.size() + exps_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        out.emplace_back(coeff_[i]);
        if (i < exps_.size()) {
            out.emplace_back(TPower{exps_[i]});
        }
    }
    return out;
}

MixedWord MixedWord::inverse() const
{
    std::vector<MixedToken> out;
    const FiniteGroup& g = *group_;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        out.emplace_back(g.inverse(coeff_[i]));
        if (i > 0) {
            out.emplace_back(TPower{-exps_[i - 1]});
        }
    }
    return MixedWord(group_, out);
}

MixedWord operator*(const MixedWord& a, const MixedWord& b)
{
    if (a.group_ != b.group_) {
        throw std::invalid_argument("MixedWord: product of words over different groups");
    }
    auto toks = a.tokens();
    const auto tb = b.tokens();
    toks.insert(toks.end(), tb.begin(), tb.end());
    return MixedWord(a.group_, toks);
}

bool operator==(const MixedWord& a, const MixedWord& b)
{
    return a.group_ == b.group_ && a.coeff_ == b.coeff_ && a.exps_ == b.exps_;
}

MixedWord commutator(const MixedWord& a, const MixedWord& b)
{
    return a * b * a.inverse() * b.inverse();
}

MixedWord iterated_commutator(std::span<const MixedWord> ws)
{
    if (ws.empty()) {
        throw std::invalid_argument("iterated_commutator: empty word list");
    }
    MixedWord acc = ws.back();
    for (std::size_t i = ws.size() - 1; i-- > 0;) {
        acc = commutator(ws[i], acc);
    }
    return acc;
}

MixedIdentityVerdict is_mixed_identity(const MixedWord& w, const FiniteGroup& g)
{
    if (&w.group() != &g) {
        throw std::invalid_argument("is_mixed_identity: word coefficients are not in this group");
    }
    for (FiniteGroup::Element x = 0; x < g.order(); ++x) {
        const auto v = w.evaluate(x);
        if (v != g.identity()) {
            return {false, x, v};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

std::size_t enumerate_mixed_words(const FiniteGroupPtr& group, std::int64_t max_t_length,
                                  const std::function<bool(const MixedWord&)>& visit)
{
    if (max_t_length < 1) {
        throw std::invalid_argument("enumerate_mixed_words: depth must be at least 1");
    }
    const FiniteGroup& g = *group;
    const std::size_t n = g.order();
    std::size_t visited = 0;
    bool stop = false;

    std::vector<std::int64_t> exps;
    std::vector<FiniteGroup::Element> coeffs;

    // Coefficients for a fixed exponent pattern: interior ones non-identity.
    std::function<void(std::size_t)> fill_coeffs = [&](std::size_t i) {
        if (stop) {
            return;
        }
        const std::size_t k = exps.size();
        if (i == k) {
            std::vector<MixedToken> toks;
            for (std::size_t j = 0; j < k; ++j) {
                toks.emplace_back(TPower{exps[j]});
                toks.emplace_back(coeffs[j]);
            }
            ++visited;
            if (!visit(MixedWord(group, toks))) {
                stop = true;
            }
            return;
        }
        const bool interior = i + 1 < k;
        for (FiniteGroup::Element c = 0; c < n && !stop; ++c) {
            if (interior && c == g.identity()) {
                continue;
            }
            coeffs[i] = c;
            fill_coeffs(i + 1);
        }
    };

    std::function<void(std::size_t, std::int64_t)> fill_exps = [&](std::size_t i, std::int64_t budget) {
        if (stop) {
            return;
        }
        if (i == exps.size()) {
            fill_coeffs(0);
            return;
        }
        const auto remaining_slots = static_cast<std::int64_t>(exps.size() - i - 1);
        for (std::int64_t a = 1; a + remaining_slots <= budget && !stop; ++a) {
            for (std::int64_t sign : {1, -1}) {
                exps[i] = sign * a;
                fill_exps(i + 1, budget - a);
            }
        }
    };

    for (std::int64_t k = 1; k <= max_t_length && !stop; ++k) {
        exps.assign(static_cast<std::size_t>(k), 0);
        coeffs.assign(static_cast<std::size_t>(k), 0);
        fill_exps(0, max_t_length);
    }
    return visited;
}

} // namespace commlab::words
