#include <algorithm>
#include <map>
#include <numeric>
#include <climits>
#include <set>

#include "gtop/fpgroup.hpp"

namespace gtop {

namespace {

// order of each generator when every relator is a power of one generator;
// 0 means infinite cyclic factor
std::optional<std::vector<long long>> free_product_orders(const Presentation& p) {
    std::vector<long long> ord(p.ngens(), 0);
    for (const auto& r : p.relators) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        for (int l : c)
            if (l != c.front()) return std::nullopt;
        int g = gen_of(c.front());
        ord[g] = std::gcd(ord[g], static_cast<long long>(c.size()));
    }
    return ord;
}

bool is_abelian_presentation(const Presentation& p) {
    if (p.ngens() <= 1) return true;
    std::set<Word> rels;
    for (const auto& r : p.relators) rels.insert(cyclic_canonical(cyclic_reduce(r)));
    for (int i = 0; i < p.ngens(); ++i)
        for (int j = i + 1; j < p.ngens(); ++j) {
            Word c{letter(i), letter(j), -letter(i), -letter(j)};
            if (!rels.count(cyclic_canonical(c))) return false;
        }
    return true;
}

std::string cyclic_name(long long k) { return k == 0 ? "Z" : "Z/" + std::to_string(k); }

}  // namespace

GroupIdentity identify(const Presentation& p, long long max_cosets) {
    GroupIdentity gi;
    TietzeResult t = tietze_simplify(p);
    gi.simplified = t.presentation;
    gi.abelian = abelianize(t.presentation);
    const Presentation& s = t.presentation;

    if (s.ngens() == 0) {
        gi.kind = GroupIdentity::Kind::trivial;
        gi.name = "1";
        gi.order = 1;
        gi.certified = true;
        return gi;
    }
    if (auto ord = free_product_orders(s)) {
        std::vector<long long> factors;
        for (long long k : *ord)
            if (k != 1) factors.push_back(k);
        gi.certified = true;
        if (factors.empty()) {
            gi.kind = GroupIdentity::Kind::trivial;
            gi.name = "1";
            gi.order = 1;
        } else if (factors.size() == 1) {
            gi.kind = factors[0] == 0 ? GroupIdentity::Kind::free : GroupIdentity::Kind::cyclic;
            gi.name = cyclic_name(factors[0]);
            if (factors[0] > 0) gi.order = factors[0];
        } else if (std::all_of(factors.begin(), factors.end(), [](long long k) { return k == 0; })) {
            gi.kind = GroupIdentity::Kind::free;
            gi.name = "F_" + std::to_string(factors.size());
        } else {
            gi.kind = GroupIdentity::Kind::free_product;
            std::sort(factors.begin(), factors.end(), [](long long a, long long b) {
                return (a == 0 ? LLONG_MAX : a) < (b == 0 ? LLONG_MAX : b);
            });
            for (std::size_t i = 0; i < factors.size(); ++i) gi.name += (i ? "*" : "") + cyclic_name(factors[i]);
        }
        return gi;
    }
    if (gi.abelian.rank == 0) {
        auto res = coset_enumerate(s, {}, max_cosets);
        if (res.complete()) {
            long long n = res.table.size();
            gi.order = n;
            gi.certified = true;
            BigInt ab = 1;
            for (const auto& d : gi.abelian.torsion) ab *= d;
            if (ab == n) {
                if (gi.abelian.torsion.size() == 1) {
                    gi.kind = GroupIdentity::Kind::cyclic;
                    gi.name = "Z/" + std::to_string(n);
                } else if (n == 1) {
                    gi.kind = GroupIdentity::Kind::trivial;
                    gi.name = "1";
                } else {
                    gi.kind = GroupIdentity::Kind::abelian;
                    gi.name = gi.abelian.to_string();
                }
            } else {
                gi.kind = GroupIdentity::Kind::finite;
                gi.name = "order " + std::to_string(n);
            }
            return gi;
        }
        gi.kind = GroupIdentity::Kind::unknown;
        gi.name = "unknown";
        return gi;
    }
    if (is_abelian_presentation(s)) {
        gi.certified = true;
        if (gi.abelian.torsion.empty()) {
            gi.kind = GroupIdentity::Kind::free_abelian;
            gi.name = gi.abelian.rank == 1 ? "Z" : "Z^" + std::to_string(gi.abelian.rank);
        } else {
            gi.kind = GroupIdentity::Kind::abelian;
            gi.name = gi.abelian.to_string();
        }
        return gi;
    }
    gi.kind = GroupIdentity::Kind::unknown;
    gi.name = "unknown";
    return gi;
}

// ---------------------------------------------------------------- word problem

WordSolver::WordSolver(const Presentation& p, long long max_cosets) : t_(tietze_simplify(p)) {
    const Presentation& s = t_.presentation;
    if (s.ngens() == 0) {
        mode_ = Mode::trivial;
        return;
    }
    if (auto ord = free_product_orders(s)) {
        mode_ = Mode::free_product;
        cyclic_order_ = *ord;
        return;
    }
    IntMatrix m = relation_matrix(s);
    if (m.empty()) {
        smith_.rows = 0;
        smith_.cols = s.ngens();
        smith_.V.assign(s.ngens(), std::vector<BigInt>(s.ngens(), 0));
        for (int i = 0; i < s.ngens(); ++i) smith_.V[i][i] = 1;
    } else {
        smith_ = smith_normal_form(std::move(m), true);
    }
    if (is_abelian_presentation(s)) {
        mode_ = Mode::abelian;
        return;
    }
    if (s.ngens() - static_cast<int>(smith_.diagonal.size()) == 0) {
        auto res = coset_enumerate(s, {}, max_cosets);
        if (res.complete()) {
            regular_ = res.table;
            mode_ = Mode::finite;
            return;
        }
    }
    mode_ = Mode::fallback;
    for (const auto& r : s.relators) {
        Word c = cyclic_reduce(r);
        for (const Word& base : {c, inverse(c)})
            for (std::size_t k = 0; k < base.size(); ++k) {
                Word rot(base.begin() + static_cast<long>(k), base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(k));
                dehn_rules_.push_back(std::move(rot));
            }
    }
}

Verdict WordSolver::abelian_test(const Word& w) const {
    const int n = t_.presentation.ngens();
    auto e = exponent_sums(w, n);
    const int k = static_cast<int>(smith_.diagonal.size());
    for (int j = 0; j < n; ++j) {
        BigInt y = 0;
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) y += smith_.V[i][j] * e[i];
        if (j < k) {
            if (y % smith_.diagonal[j] != 0) return Verdict::no;
        } else if (y != 0) {
            return Verdict::no;
        }
    }
    return mode_ == Mode::abelian ? Verdict::yes : Verdict::unknown;
}

Verdict WordSolver::dehn(const Word& start) const {
    Word w = free_reduce(start);
    bool changed = true;
    while (changed && !w.empty()) {
        changed = false;
        for (const auto& r : dehn_rules_) {
            const std::size_t L = r.size();
            const std::size_t need = L / 2 + 1;
            if (w.size() < need) continue;
            for (std::size_t pos = 0; pos + need <= w.size() && !changed; ++pos) {
                std::size_t m = 0;
                while (m < L && pos + m < w.size() && w[pos + m] == r[m]) ++m;
                if (m >= need) {
                    // replace r[0..m) by the inverse of r[m..L)
                    Word rest(r.begin() + static_cast<long>(m), r.end());
                    Word nw(w.begin(), w.begin() + static_cast<long>(pos));
                    Word inv = inverse(rest);
                    nw.insert(nw.end(), inv.begin(), inv.end());
                    nw.insert(nw.end(), w.begin() + static_cast<long>(pos + m), w.end());
                    w = free_reduce(nw);
                    changed = true;
                }
            }
            if (changed) break;
        }
    }
    return w.empty() ? Verdict::yes : Verdict::unknown;
}

Verdict WordSolver::is_trivial(const Word& word) const {
    Word w = t_.map_word(word);
    switch (mode_) {
        case Mode::trivial:
            return Verdict::yes;
        case Mode::free_product: {
            std::vector<std::pair<int, long long>> st;
            for (int l : w) {
                int g = gen_of(l);
                long long k = cyclic_order_[g];
                if (k == 1) continue;
                long long d = l > 0 ? 1 : -1;
                if (!st.empty() && st.back().first == g) {
                    st.back().second += d;
                } else {
                    st.emplace_back(g, d);
                }
                if (k > 0) st.back().second = ((st.back().second % k) + k) % k;
                if (st.back().second == 0) st.pop_back();
            }
            return st.empty() ? Verdict::yes : Verdict::no;
        }
        case Mode::finite:
            return regular_->trace(0, w) == 0 ? Verdict::yes : Verdict::no;
        case Mode::abelian:
            return abelian_test(w);
        case Mode::fallback:
            if (w.empty()) return Verdict::yes;
            if (abelian_test(w) == Verdict::no) return Verdict::no;
            return dehn(w);
    }
    return Verdict::unknown;
}

std::optional<std::vector<long long>> WordSolver::canonical_key(const Word& word) const {
    Word w = t_.map_word(word);
    std::vector<long long> key;
    switch (mode_) {
        case Mode::trivial:
            return key;
        case Mode::free_product: {
            for (int l : w) {
                int g = gen_of(l);
                long long k = cyclic_order_[g];
                if (k == 1) continue;
                long long d = l > 0 ? 1 : -1;
                if (key.size() >= 2 && key[key.size() - 2] == g)
                    key.back() += d;
                else {
                    key.push_back(g);
                    key.push_back(d);
                }
                if (k > 0) key.back() = ((key.back() % k) + k) % k;
                if (key.back() == 0) key.resize(key.size() - 2);
            }
            return key;
        }
        case Mode::finite:
            return std::vector<long long>{regular_->trace(0, w)};
        case Mode::abelian: {
            const int n = t_.presentation.ngens();
            auto e = exponent_sums(w, n);
            const int k = static_cast<int>(smith_.diagonal.size());
            for (int j = 0; j < n; ++j) {
                BigInt y = 0;
                for (int i = 0; i < n; ++i)
                    if (e[i] != 0) y += smith_.V[i][j] * e[i];
                if (j < k) {
                    y %= smith_.diagonal[j];
                    if (y < 0) y += smith_.diagonal[j];
                }
                key.push_back(y.convert_to<long long>());
            }
            return key;
        }
        case Mode::fallback:
            break;
    }
    return std::nullopt;
}

int WordSolver::element_of(const Word& w) const {
    if (mode_ == Mode::trivial) return 0;
    if (mode_ != Mode::finite) return -1;
    return regular_->trace(0, t_.map_word(w));
}

Verdict word_is_trivial(const Presentation& p, const Word& w, long long max_cosets) {
    return WordSolver(p, max_cosets).is_trivial(w);
}

}  // namespace gtop
