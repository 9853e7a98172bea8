#include "commlab/words/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace commlab::words {

FreeWord FreeWord::reduce(std::span<const Syllable> raw)
{
    FreeWord out;
    auto& st = out.syl_;
    st.reserve(raw.size());
    for (const Syllable& s : raw) {
        if (s.exp == 0) {
            continue;
        }
        if (!st.empty() && st.back().gen == s.gen) {
            st.back().exp += s.exp;
            if (st.back().exp == 0) {
                st.pop_back();
            }
        } else {
            st.push_back(s);
        }
    }
    return out;
}

FreeWord reduce_free_word(std::span<const Syllable> raw)
{
    return FreeWord::reduce(raw);
}

FreeWord FreeWord::generator(GeneratorId g, std::int64_t exp)
{
    const Syllable s{g, exp};
    return reduce(std::span<const Syllable>(&s, 1));
}

std::int64_t FreeWord::letter_length() const
{
    std::int64_t n = 0;
    for (const auto& s : syl_) {
        n += std::llabs(s.exp);
    }
    return n;
}

std::int64_t FreeWord::exponent_sum(GeneratorId g) const
{
    std::int64_t n = 0;
    for (const auto& s : syl_) {
        if (s.gen == g) {
            n += s.exp;
        }
    }
    return n;
}

FreeWord FreeWord::inverse() const
{
    FreeWord out;
    out.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
        out.syl_.push_back({it->gen, -it->exp});
    }
    return out;
}

std::string FreeWord::to_string() const
{
    if (syl_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto& syl : syl_) {
        if (!s.empty()) {
            s += ' ';
        }
        if (syl.gen == kX) {
            s += 'x';
        } else if (syl.gen == kY) {
            s += 'y';
        } else {
            s += 'g' + std::to_string(syl.gen);
        }
        if (syl.exp != 1) {
            s += '^' + std::to_string(syl.exp);
        }
    }
    return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b)
{
    std::vector<Syllable> raw;
    raw.reserve(a.syl_.size() + b.syl_.size());
    raw.insert(raw.end(), a.syl_.begin(), a.syl_.end());
    raw.insert(raw.end(), b.syl_.begin(), b.syl_.end());
    return FreeWord::reduce(raw);
}

FreeWord commutator(const FreeWord& a, const FreeWord& b)
{
    return a * b * a.inverse() * b.inverse();
}

FreeWord w_sequence(int n)
{
    if (n < 1) {
        throw std::invalid_argument("w_sequence: n must be at least 1");
    }
    FreeWord w = FreeWord::generator(kX);
    for (int k = 1; k < n; ++k) {
        const FreeWord conj = FreeWord::generator(kY, k) * FreeWord::generator(kX) *
                              FreeWord::generator(kY, -k);
        w = commutator(w, conj);
    }
    return w;
}

} // namespace commlab::words
