#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gtop/fpgroup.hpp"

namespace gtop {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

Word power(const Word& w, long long k) {
    Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

namespace {
// order letters as a, a^-1, b, b^-1, ...
int letter_key(int l) { return 2 * gen_of(l) + (l < 0); }

bool letter_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](int x, int y) { return letter_key(x) < letter_key(y); });
}

// least rotation, Booth's algorithm would do; words here are short
Word least_rotation(const Word& w) {
    const std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            int a = w[(s + k) % n], b = w[(best + k) % n];
            if (a != b) {
                if (letter_key(a) < letter_key(b)) best = s;
                break;
            }
        }
    }
    Word out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = w[(best + k) % n];
    return out;
}
}  // namespace

Word cyclic_canonical(const Word& w) {
    if (w.empty()) return w;
    Word a = least_rotation(w), b = least_rotation(inverse(w));
    return letter_less(b, a) ? b : a;
}

std::vector<long long> exponent_sums(const Word& w, int ngens) {
    std::vector<long long> e(ngens, 0);
    for (int l : w) e[gen_of(l)] += l > 0 ? 1 : -1;
    return e;
}

Presentation Presentation::with_generators(int n, const std::string& prefix) {
    Presentation p;
    for (int i = 0; i < n; ++i) p.generators.push_back(prefix + std::to_string(i));
    return p;
}

// ---------------------------------------------------------------- text format

namespace {

struct WordParser {
    const Presentation& p;
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' || s[i] == '.')) ++i;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParameterError("presentation parse error at offset " + std::to_string(i) + ": " + msg);
    }
    long long exponent() {
        skip();
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected exponent");
        long long e = std::stoll(std::string(s.substr(start, i - start)));
        return neg ? -e : e;
    }
    Word factor() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        Word base;
        if (s[i] == '(') {
            ++i;
            base = product();
            skip();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
        } else if (s[i] == '1') {
            ++i;
        } else {
            // longest generator name matching here
            int best = -1;
            std::size_t best_len = 0;
            for (int g = 0; g < p.ngens(); ++g) {
                const auto& nm = p.generators[g];
                if (nm.size() > best_len && s.substr(i, nm.size()) == nm) {
                    best = g;
                    best_len = nm.size();
                }
            }
            if (best < 0) fail("unknown generator");
            i += best_len;
            base = {letter(best)};
        }
        return power(base, exponent());
    }
    Word product() {
        Word w;
        while (true) {
            skip();
            if (i >= s.size() || s[i] == ')' || s[i] == ',' || s[i] == '>') break;
            Word f = factor();
            w.insert(w.end(), f.begin(), f.end());
        }
        return free_reduce(w);
    }
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Word parse_word(const Presentation& p, std::string_view text) {
    WordParser wp{p, text};
    Word w = wp.product();
    wp.skip();
    if (wp.i != text.size()) wp.fail("trailing characters");
    return w;
}

Presentation parse_presentation(std::string_view text) {
    auto lt = text.find('<');
    auto gt = text.rfind('>');
    if (lt == std::string_view::npos || gt == std::string_view::npos || gt < lt)
        throw ParameterError("presentation must be written <generators | relators>");
    std::string_view body = text.substr(lt + 1, gt - lt - 1);
    auto bar = body.find('|');
    std::string_view gens = body.substr(0, bar);
    std::string_view rels = bar == std::string_view::npos ? std::string_view{} : body.substr(bar + 1);

    Presentation p;
    std::size_t i = 0;
    while (i < gens.size()) {
        while (i < gens.size() && (std::isspace(static_cast<unsigned char>(gens[i])) || gens[i] == ',')) ++i;
        std::size_t start = i;
        while (i < gens.size() && ident_char(gens[i])) ++i;
        if (start == i) {
            if (i < gens.size()) throw ParameterError("bad generator name in presentation");
            break;
        }
        std::string nm(gens.substr(start, i - start));
        if (std::isdigit(static_cast<unsigned char>(nm[0]))) throw ParameterError("generator names must not start with a digit");
        if (std::find(p.generators.begin(), p.generators.end(), nm) != p.generators.end())
            throw ParameterError("duplicate generator '" + nm + "'");
        p.generators.push_back(nm);
    }
    WordParser wp{p, rels};
    while (true) {
        wp.skip();
        if (wp.i >= rels.size()) break;
        Word w = wp.product();
        if (!w.empty()) p.relators.push_back(w);
        wp.skip();
        if (wp.i < rels.size()) {
            if (rels[wp.i] != ',') wp.fail("expected ','");
            ++wp.i;
        }
    }
    return p;
}

std::string word_to_text(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    bool single = std::all_of(p.generators.begin(), p.generators.end(),
                              [](const std::string& s) { return s.size() == 1; });
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
        if (!first && !single) os << '*';
        os << p.generators[gen_of(w[i])];
        if (e != 1) os << '^' << e;
        first = false;
        i = j;
    }
    return os.str();
}

std::string to_text(const Presentation& p) {
    std::ostringstream os;
    os << '<';
    for (int g = 0; g < p.ngens(); ++g) os << (g ? "," : "") << p.generators[g];
    os << " | ";
    for (std::size_t r = 0; r < p.relators.size(); ++r) os << (r ? ", " : "") << word_to_text(p, p.relators[r]);
    os << '>';
    return os.str();
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

}  // namespace gtop
