#include "commlab/words/finite_group.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "commlab/util/rng.hpp"

namespace commlab::words {

namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw std::invalid_argument("FiniteGroup: " + what);
}

std::string cycle_label(const Permutation& p)
{
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) {
            continue;
        }
        s += '(';
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            s += std::to_string(j + 1);
            j = p[j];
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& g, const Permutation& h)
{
    Permutation r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        r[i] = g[h[i]];
    }
    return r;
}

FiniteGroupPtr from_permutation_list(const std::vector<Permutation>& elems, std::string name)
{
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        index[elems[i]] = i;
    }
    const std::size_t n = elems.size();
    std::vector<std::size_t> table(n * n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(cycle_label(elems[a]));
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(compose(elems[a], elems[b]));
            if (it == index.end()) {
                fail("permutation list is not closed");
            }
            table[a * n + b] = it->second;
        }
    }
    return std::make_shared<FiniteGroup>(std::move(labels), std::move(table), std::move(name));
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<Element> table, std::string name)
    : n_(labels.size()), labels_(std::move(labels)), table_(std::move(table)), name_(std::move(name))
{
    const std::size_t n = n_;
    if (n == 0) {
        fail("order must be positive");
    }
    if (table_.size() != n * n) {
        fail("table has " + std::to_string(table_.size()) + " entries, expected " + std::to_string(n * n));
    }
    {
        std::map<std::string, std::size_t> seen;
        for (const auto& l : labels_) {
            if (l.empty() || l.find_first_of(" \t\n.") != std::string::npos || l == "t") {
                fail("invalid label '" + l + "'");
            }
            if (!seen.emplace(l, 0).second) {
                fail("duplicate label '" + l + "'");
            }
        }
    }
    for (Element x : table_) {
        if (x >= n) {
            fail("table entry out of range");
        }
    }
    // Latin square: every row and column is a permutation.
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<bool> row(n, false);
        std::vector<bool> col(n, false);
        for (std::size_t c = 0; c < n; ++c) {
            if (row[table_[r * n + c]] || col[table_[c * n + r]]) {
                fail("row or column " + std::to_string(r) + " is not a permutation");
            }
            row[table_[r * n + c]] = true;
            col[table_[c * n + r]] = true;
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            ok = table_[e * n + a] == a && table_[a * n + e] == a;
        }
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) {
        fail("no identity element");
    }
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
            fail("not associative at (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
        }
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    check(a, b, c);
                }
            }
        }
    } else {
        SplitMix64 rng(0xa550c1a7e5eedULL ^ n);
        for (std::size_t t = 0; t < 10 * n * n; ++t) {
            check(rng.next() % n, rng.next() % n, rng.next() % n);
        }
    }
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a * n + b] == identity_) {
                inverse_[a] = b;
                break;
            }
        }
    }
}

FiniteGroup FiniteGroup::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::string name;
    std::size_t order = 0;
    std::vector<std::string> labels;
    std::vector<Element> table;
    bool in_table = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        if (in_table) {
            long long v;
            while (ls >> v) {
                if (v < 0) {
                    fail("negative table entry");
                }
                table.push_back(static_cast<Element>(v));
            }
            if (!ls.eof()) {
                fail("non-integer token in table");
            }
            continue;
        }
        std::string key;
        if (!(ls >> key)) {
            continue;
        }
        if (key == "name") {
            ls >> name;
        } else if (key == "order") {
            if (!(ls >> order)) {
                fail("malformed order line");
            }
        } else if (key == "labels") {
            std::string l;
            while (ls >> l) {
                labels.push_back(l);
            }
        } else if (key == "table") {
            in_table = true;
            long long v;
            while (ls >> v) {
                table.push_back(static_cast<Element>(v));
            }
        } else {
            fail("unknown field '" + key + "'");
        }
    }
    if (order == 0) {
        fail("missing order");
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < order; ++i) {
            labels.push_back("g" + std::to_string(i));
        }
    }
    if (labels.size() != order) {
        fail("expected " + std::to_string(order) + " labels, got " + std::to_string(labels.size()));
    }
    return FiniteGroup(std::move(labels), std::move(table), std::move(name));
}

FiniteGroup FiniteGroup::load(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot read group file: " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::string FiniteGroup::serialize() const
{
    std::ostringstream out;
    if (!name_.empty()) {
        out << "name " << name_ << '\n';
    }
    out << "order " << n_ << "\nlabels";
    for (const auto& l : labels_) {
        out << ' ' << l;
    }
    out << "\ntable\n";
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            out << (b ? " " : "") << table_[a * n_ + b];
        }
        out << '\n';
    }
    return out.str();
}

FiniteGroup::Element FiniteGroup::power(Element a, long long e) const
{
    Element base = e < 0 ? inverse(a) : a;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Element r = identity_;
    while (k) {
        if (k & 1u) {
            r = multiply(r, base);
        }
        base = multiply(base, base);
        k >>= 1u;
    }
    return r;
}

std::optional<FiniteGroup::Element> FiniteGroup::find(std::string_view label) const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t FiniteGroup::element_order(Element a) const
{
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = multiply(x, a)) {
        ++k;
    }
    return k;
}

std::size_t FiniteGroup::exponent() const
{
    std::size_t e = 1;
    for (std::size_t a = 0; a < n_; ++a) {
        e = std::lcm(e, element_order(a));
    }
    return e;
}

bool FiniteGroup::is_abelian() const
{
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a + 1; b < n_; ++b) {
            if (multiply(a, b) != multiply(b, a)) {
                return false;
            }
        }
    }
    return true;
}

namespace groups {

FiniteGroupPtr cyclic(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("cyclic: order must be positive");
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? std::string("e") : "r" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
            table[a * n + b] = (a + b) % n;
        }
    }
    return std::make_shared<FiniteGroup>(std::move(labels), std::move(table), "Z" + std::to_string(n));
}

FiniteGroupPtr symmetric3()
{
    return from_permutation_list({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}, "Sym3");
}

FiniteGroupPtr quaternion()
{
    // Units of the quaternions as (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k.
    const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto index = [](int sign, int axis) { return static_cast<std::size_t>(2 * axis + (sign < 0 ? 1 : 0)); };
    // Products of basis units: unit_mul[p][q] = (sign, axis).
    const int mul_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int mul_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::size_t> table(64);
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            const int sa = (a % 2) ? -1 : 1;
            const int sb = (b % 2) ? -1 : 1;
            const int pa = a / 2;
            const int pb = b / 2;
            table[static_cast<std::size_t>(a * 8 + b)] = index(sa * sb * mul_sign[pa][pb], mul_axis[pa][pb]);
        }
    }
    return std::make_shared<FiniteGroup>(labels, std::move(table), "Q8");
}

FiniteGroupPtr dihedral(std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("dihedral: n must be at least 2");
    }
    Permutation r(n);
    Permutation s(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
    }
    return from_permutation_generators({r, s}, "D" + std::to_string(n));
}

FiniteGroupPtr klein_four()
{
    return from_permutation_list({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, "V4");
}

FiniteGroupPtr alternating4()
{
    return from_permutation_generators({{1, 0, 3, 2}, {1, 2, 0, 3}}, "Alt4");
}

FiniteGroupPtr alternating5()
{
    return from_permutation_generators({{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}}, "Alt5");
}

FiniteGroupPtr from_permutation_generators(const std::vector<Permutation>& gens, std::string name)
{
    if (gens.empty()) {
        throw std::invalid_argument("from_permutation_generators: no generators");
    }
    const std::size_t m = gens.front().size();
    Permutation id(m);
    std::iota(id.begin(), id.end(), std::size_t{0});
    std::vector<Permutation> elems{id};
    std::map<Permutation, std::size_t> seen{{id, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            if (g.size() != m) {
                throw std::invalid_argument("from_permutation_generators: degree mismatch");
            }
            Permutation p = compose(elems[cur], g);
            if (seen.emplace(p, elems.size()).second) {
                elems.push_back(p);
                queue.push_back(elems.size() - 1);
            }
        }
    }
    return from_permutation_list(elems, std::move(name));
}

std::vector<FiniteGroupPtr> test_catalog()
{
    return {cyclic(2), cyclic(3), cyclic(6), klein_four(), symmetric3(), quaternion(),
            dihedral(4), dihedral(5), alternating4(), alternating5()};
}

} // namespace groups

} // namespace commlab::words
