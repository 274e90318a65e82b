#include <algorithm>
#include <set>

#include "gtop/fpgroup.hpp"

namespace gtop {

Word TietzeResult::map_word(const Word& w) const {
    Word out;
    for (int l : w) {
        const Word& img = image[gen_of(l)];
        if (l > 0)
            out.insert(out.end(), img.begin(), img.end());
        else {
            Word inv = inverse(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

namespace {

Word substitute(const Word& w, int g, const Word& value) {
    Word out;
    Word inv = inverse(value);
    for (int l : w) {
        if (gen_of(l) != g)
            out.push_back(l);
        else if (l > 0)
            out.insert(out.end(), value.begin(), value.end());
        else
            out.insert(out.end(), inv.begin(), inv.end());
    }
    return free_reduce(out);
}

void normalise(std::vector<Word>& rels) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (const auto& r : rels) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        Word key = cyclic_canonical(c);
        if (seen.insert(key).second) out.push_back(key);
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    rels.swap(out);
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p) {
    const int n = p.ngens();
    std::vector<Word> image(n);
    for (int g = 0; g < n; ++g) image[g] = {letter(g)};
    std::vector<Word> rels = p.relators;
    std::vector<char> alive(n, 1);

    long long total = 0;
    for (const auto& r : rels) total += static_cast<long long>(r.size());
    const long long growth_cap = std::max<long long>(4 * total + 1000, 20000);

    normalise(rels);
    while (true) {
        // occurrences of each generator across all relators
        std::vector<long long> occ(n, 0);
        for (const auto& r : rels)
            for (int l : r) ++occ[gen_of(l)];

        int best_rel = -1, best_gen = -1;
        long long best_cost = 0;
        for (int ri = 0; ri < static_cast<int>(rels.size()); ++ri) {
            const Word& r = rels[ri];
            std::vector<int> cnt;
            for (int l : r) {
                int g = gen_of(l);
                if (static_cast<int>(cnt.size()) <= g) cnt.resize(g + 1, 0);
                ++cnt[g];
            }
            for (int g = 0; g < static_cast<int>(cnt.size()); ++g) {
                if (cnt[g] != 1) continue;
                long long cost = (static_cast<long long>(r.size()) - 2) * (occ[g] - 1);
                if (best_rel < 0 || cost < best_cost) {
                    best_rel = ri;
                    best_gen = g;
                    best_cost = cost;
                }
            }
            if (best_rel >= 0 && best_cost <= 0) break;
        }
        if (best_rel < 0) break;
        long long now = 0;
        for (const auto& r : rels) now += static_cast<long long>(r.size());
        if (best_cost > 0 && now + best_cost > growth_cap) break;

        // rotate so the eliminated letter is first: r = g^e U, so g^e = U^-1
        Word r = rels[best_rel];
        auto it = std::find_if(r.begin(), r.end(), [&](int l) { return gen_of(l) == best_gen; });
        std::rotate(r.begin(), it, r.end());
        int e = r.front();
        Word u(r.begin() + 1, r.end());
        Word value = e > 0 ? inverse(u) : u;

        rels.erase(rels.begin() + best_rel);
        for (auto& x : rels) x = substitute(x, best_gen, value);
        for (auto& x : image) x = substitute(x, best_gen, value);
        alive[best_gen] = 0;
        normalise(rels);
    }

    // renumber surviving generators
    std::vector<int> newid(n, -1);
    TietzeResult out;
    for (int g = 0; g < n; ++g)
        if (alive[g]) {
            newid[g] = out.presentation.ngens();
            out.presentation.generators.push_back(p.generators[g]);
        }
    auto renum = [&](const Word& w) {
        Word o;
        for (int l : w) o.push_back(l > 0 ? letter(newid[gen_of(l)]) : -letter(newid[gen_of(l)]));
        return o;
    };
    for (const auto& r : rels) out.presentation.relators.push_back(renum(r));
    for (const auto& w : image) out.image.push_back(renum(w));
    return out;
}

}  // namespace gtop
