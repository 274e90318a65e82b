#include <algorithm>
#include <deque>
#include <queue>

#include "gtop/fpgroup.hpp"

namespace gtop {

CosetTable::CosetTable(int ngens, std::vector<int> table) : ngens_(ngens), t_(std::move(table)) {
    if (ngens_ == 0) {
        // trivial free group: a single coset and no columns
        t_.clear();
        return;
    }
    if (t_.size() % (2 * ngens_) != 0) throw ValidationError("coset table has ragged rows");
    const int n = size();
    for (int c = 0; c < n; ++c)
        for (int g = 0; g < ngens_; ++g) {
            int d = act(c, letter(g));
            if (d < 0 || d >= n || act(d, -letter(g)) != c) throw ValidationError("coset table is not complete");
        }
}

int CosetTable::trace(int coset, const Word& w) const {
    for (int l : w) coset = act(coset, l);
    return coset;
}

std::vector<Word> CosetTable::transversal() const {
    const int n = ngens_ ? size() : 1;
    std::vector<Word> rep(n);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int g = 0; g < ngens_; ++g)
            for (int l : {letter(g), -letter(g)}) {
                int d = act(c, l);
                if (!seen[d]) {
                    seen[d] = 1;
                    rep[d] = rep[c];
                    rep[d].push_back(l);
                    q.push(d);
                }
            }
    }
    return rep;
}

namespace {

class Enumerator {
public:
    Enumerator(const Presentation& p, long long max_cosets)
        : n_(p.ngens()), cols_(2 * p.ngens()), max_(max_cosets) {
        for (const auto& r : p.relators) {
            Word w = cyclic_reduce(r);
            if (!w.empty()) rels_.push_back(std::move(w));
        }
        for (const auto& r : rels_) margin_ += static_cast<long long>(r.size());
        margin_ += cols_ + 1;
    }

    CosetResult run(const std::vector<Word>& subgroup) {
        CosetResult res;
        new_coset();
        for (const auto& w : subgroup) {
            Word r = free_reduce(w);
            if (!r.empty()) scan(0, r, true);
        }
        long long c = 0;
        while (c < rows()) {
            if (rows() + margin_ > max_) {
                c = lookahead_and_compact(c);
                if (rows() + margin_ > max_) {
                    res.status = CosetResult::Status::budget_exceeded;
                    res.defined = defined_;
                    return res;
                }
            }
            if (alive(c)) {
                for (const auto& r : rels_) {
                    scan(static_cast<int>(c), r, true);
                    if (!alive(c)) break;
                }
                if (alive(c))
                    for (int x = 0; x < cols_; ++x)
                        if (at(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
            }
            ++c;
        }
        res.status = CosetResult::Status::complete;
        res.defined = defined_;
        res.table = standardise();
        return res;
    }

private:
    int n_, cols_;
    long long max_;
    long long margin_ = 0;
    long long defined_ = 0;
    std::vector<Word> rels_;
    std::vector<int> t_;
    std::vector<int> fwd_;  // fwd_[c] == c iff alive

    long long rows() const { return static_cast<long long>(fwd_.size()); }
    bool alive(long long c) const { return fwd_[c] == c; }
    int& at(int c, int x) { return t_[static_cast<std::size_t>(c) * cols_ + x]; }
    static int col(int l) { return CosetTable::col(l); }
    static int inv(int x) { return x ^ 1; }

    int new_coset() {
        int c = static_cast<int>(fwd_.size());
        fwd_.push_back(c);
        t_.resize(t_.size() + cols_, -1);
        ++defined_;
        return c;
    }

    void define(int c, int x) {
        int d = new_coset();
        at(c, x) = d;
        at(d, inv(x)) = c;
    }

    int rep(int c) {
        int r = c;
        while (fwd_[r] != r) r = fwd_[r];
        while (fwd_[c] != r) {
            int nx = fwd_[c];
            fwd_[c] = r;
            c = nx;
        }
        return r;
    }

    void merge(int a, int b, std::deque<int>& q) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        fwd_[b] = a;
        q.push_back(b);
    }

    void coincidence(int a, int b) {
        std::deque<int> q;
        merge(a, b, q);
        while (!q.empty()) {
            int e = q.front();
            q.pop_front();
            for (int x = 0; x < cols_; ++x) {
                int f = at(e, x);
                if (f < 0) continue;
                if (at(f, inv(x)) == e) at(f, inv(x)) = -1;
                int e1 = rep(e), f1 = rep(f);
                int cur = at(e1, x);
                if (cur >= 0) {
                    merge(f1, cur, q);
                } else if (at(f1, inv(x)) >= 0) {
                    merge(e1, at(f1, inv(x)), q);
                } else {
                    at(e1, x) = f1;
                    at(f1, inv(x)) = e1;
                }
            }
        }
    }

    // relator scan from coset c; defines new cosets when `fill`
    void scan(int c, const Word& w, bool fill) {
        const int len = static_cast<int>(w.size());
        int f = c, b = c, i = 0, j = len - 1;
        while (true) {
            while (i <= j && at(f, col(w[i])) >= 0) {
                f = at(f, col(w[i]));
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(b, col(-w[j])) >= 0) {
                b = at(b, col(-w[j]));
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, col(w[i])) = b;
                at(b, col(-w[i])) = f;
                return;
            }
            if (!fill) return;
            define(f, col(w[i]));
        }
    }

    // returns the new index of coset `c`
    long long lookahead_and_compact(long long c) {
        for (long long d = 0; d < rows(); ++d) {
            if (!alive(d)) continue;
            for (const auto& r : rels_) {
                scan(static_cast<int>(d), r, false);
                if (!alive(d)) break;
            }
        }
        // compaction keeps relative order
        std::vector<int> map(fwd_.size(), -1);
        int k = 0;
        for (long long d = 0; d < rows(); ++d)
            if (alive(d)) map[d] = k++;
        std::vector<int> nt(static_cast<std::size_t>(k) * cols_, -1);
        for (long long d = 0; d < rows(); ++d) {
            if (!alive(d)) continue;
            for (int x = 0; x < cols_; ++x) {
                int e = at(static_cast<int>(d), x);
                nt[static_cast<std::size_t>(map[d]) * cols_ + x] = e >= 0 ? map[rep(e)] : -1;
            }
        }
        // first live coset at or after c
        long long newc = k;
        for (long long d = c; d < static_cast<long long>(map.size()); ++d)
            if (map[d] >= 0) {
                newc = map[d];
                break;
            }
        t_.swap(nt);
        fwd_.resize(k);
        for (int d = 0; d < k; ++d) fwd_[d] = d;
        return newc;
    }

    CosetTable standardise() {
        std::vector<int> order, pos(fwd_.size(), -1);
        order.push_back(0);
        pos[0] = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            int c = order[k];
            for (int x = 0; x < cols_; ++x) {
                int d = rep(at(c, x));
                if (pos[d] < 0) {
                    pos[d] = static_cast<int>(order.size());
                    order.push_back(d);
                }
            }
        }
        std::vector<int> out(order.size() * cols_);
        for (std::size_t k = 0; k < order.size(); ++k)
            for (int x = 0; x < cols_; ++x) out[k * cols_ + x] = pos[rep(at(order[k], x))];
        return CosetTable(n_, std::move(out));
    }
};

}  // namespace

CosetResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup, long long max_cosets) {
    if (p.ngens() == 0) {
        CosetResult r;
        r.status = CosetResult::Status::complete;
        r.defined = 1;
        return r;
    }
    Enumerator e(p, max_cosets);
    return e.run(subgroup);
}

// ---------------------------------------------------------------- Reidemeister-Schreier

SubgroupPresentation subgroup_presentation(const Presentation& p, const CosetTable& table) {
    SubgroupPresentation out;
    const int n = p.ngens();
    const int index = n ? table.size() : 1;
    out.index = index;
    auto rep = table.transversal();
    // Schreier generator s(c,g) = rep(c) g rep(cg)^-1, trivial on tree edges
    std::vector<int> sg(static_cast<std::size_t>(index) * n, -1);
    for (int c = 0; c < index; ++c)
        for (int g = 0; g < n; ++g) {
            Word w = rep[c];
            w.push_back(letter(g));
            Word t = inverse(rep[table.act(c, letter(g))]);
            w.insert(w.end(), t.begin(), t.end());
            w = free_reduce(w);
            if (w.empty()) continue;
            sg[static_cast<std::size_t>(c) * n + g] = static_cast<int>(out.generator_words.size());
            out.generator_words.push_back(w);
        }
    for (std::size_t i = 0; i < out.generator_words.size(); ++i)
        out.presentation.generators.push_back("s" + std::to_string(i));
    auto rewrite = [&](int c, const Word& w) {
        Word out_w;
        for (int l : w) {
            int g = gen_of(l);
            if (l > 0) {
                int s = sg[static_cast<std::size_t>(c) * n + g];
                if (s >= 0) out_w.push_back(letter(s));
                c = table.act(c, l);
            } else {
                int d = table.act(c, l);
                int s = sg[static_cast<std::size_t>(d) * n + g];
                if (s >= 0) out_w.push_back(-letter(s));
                c = d;
            }
        }
        return free_reduce(out_w);
    };
    for (int c = 0; c < index; ++c)
        for (const auto& r : p.relators) {
            Word w = cyclic_reduce(rewrite(c, r));
            if (!w.empty()) out.presentation.relators.push_back(w);
        }
    return out;
}

SubgroupPresentation subgroup_presentation(const Presentation& p, const std::vector<Word>& subgroup,
                                           long long max_cosets) {
    auto res = coset_enumerate(p, subgroup, max_cosets);
    if (!res.complete())
        throw BudgetExceeded("coset enumeration exceeded " + std::to_string(max_cosets) + " cosets");
    return subgroup_presentation(p, res.table);
}

}  // namespace gtop
