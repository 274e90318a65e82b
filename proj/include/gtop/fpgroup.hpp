#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtop/error.hpp"

namespace gtop {

using BigInt = boost::multiprecision::cpp_int;

// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

inline int letter(int gen, bool inverse = false) { return inverse ? -(gen + 1) : gen + 1; }
inline int gen_of(int l) { return (l > 0 ? l : -l) - 1; }

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word cyclic_reduce(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long long k);
// canonical representative among rotations of w and of w^-1 (w cyclically reduced)
Word cyclic_canonical(const Word& w);
std::vector<long long> exponent_sums(const Word& w, int ngens);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int ngens() const { return static_cast<int>(generators.size()); }
    static Presentation with_generators(int n, const std::string& prefix = "g");
};

// "<a,b | a^2, abab>"; generator names are identifiers, relators are
// products of names with optional integer powers and parentheses.
Presentation parse_presentation(std::string_view text);
std::string to_text(const Presentation& p);
std::string word_to_text(const Presentation& p, const Word& w);
Word parse_word(const Presentation& p, std::string_view text);

// ---------------------------------------------------------------- abelian

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
    std::vector<BigInt> diagonal;  // nonzero invariant factors, d_i | d_{i+1}
    IntMatrix U, V;                // U * A * V = D (only when transforms requested)
    int rows = 0, cols = 0;
};

SmithForm smith_normal_form(IntMatrix a, bool transforms = false);
bool verify_smith(const IntMatrix& a, const SmithForm& s);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct AbelianInvariants {
    int rank = 0;
    std::vector<BigInt> torsion;  // factors > 1, each dividing the next
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianize(const Presentation& p);
IntMatrix relation_matrix(const Presentation& p);

// ---------------------------------------------------------------- cosets

class CosetTable {
public:
    CosetTable() = default;
    CosetTable(int ngens, std::vector<int> table);  // table[c*2n + col], complete

    int size() const { return ngens_ ? static_cast<int>(t_.size()) / (2 * ngens_) : 1; }
    int ngens() const { return ngens_; }
    int act(int coset, int letter) const { return t_[coset * 2 * ngens_ + col(letter)]; }
    int trace(int coset, const Word& w) const;
    // Schreier transversal words (BFS in letter order), rep(0) = empty
    std::vector<Word> transversal() const;
    static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
    const std::vector<int>& raw() const { return t_; }

private:
    int ngens_ = 0;
    std::vector<int> t_;
};

struct CosetResult {
    enum class Status { complete, budget_exceeded };
    Status status = Status::budget_exceeded;
    CosetTable table;      // valid when complete; standardised numbering
    long long defined = 0;  // total cosets defined during the run
    bool complete() const { return status == Status::complete; }
};

inline constexpr long long kDefaultMaxCosets = 1'000'000;

CosetResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            long long max_cosets = kDefaultMaxCosets);

// ---------------------------------------------------------------- Tietze

struct TietzeResult {
    Presentation presentation;
    std::vector<Word> image;  // original generator -> word over new generators
    Word map_word(const Word& w) const;
};

TietzeResult tietze_simplify(const Presentation& p);

// ---------------------------------------------------------------- subgroups

struct SubgroupPresentation {
    Presentation presentation;
    std::vector<Word> generator_words;  // each new generator as a word in the parent
    int index = 0;
};

SubgroupPresentation subgroup_presentation(const Presentation& p, const CosetTable& table);
SubgroupPresentation subgroup_presentation(const Presentation& p, const std::vector<Word>& subgroup,
                                           long long max_cosets = kDefaultMaxCosets);

// ---------------------------------------------------------------- identify

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

struct GroupIdentity {
    enum class Kind { trivial, cyclic, finite, free, free_abelian, abelian, free_product, unknown };
    Kind kind = Kind::unknown;
    std::string name;         // "1", "Z/2", "Z", "Z^2", "F_3", "Z/2*Z", "order 8", "unknown"
    std::optional<long long> order;  // for finite groups
    AbelianInvariants abelian;
    bool certified = false;
    Presentation simplified;
};

GroupIdentity identify(const Presentation& p, long long max_cosets = kDefaultMaxCosets);

// Decides triviality of words in a fixed presentation. Reuses the
// simplification, abelianization and (if finite) the regular coset table.
class WordSolver {
public:
    explicit WordSolver(const Presentation& p, long long max_cosets = 100'000);
    Verdict is_trivial(const Word& w) const;
    Verdict are_equal(const Word& a, const Word& b) const { return is_trivial(concat(a, inverse(b))); }
    // element id for finite groups (coset of the trivial subgroup); -1 otherwise
    int element_of(const Word& w) const;
    // a key equal for two words exactly when they are equal in the group;
    // absent when the solver cannot normalise words
    std::optional<std::vector<long long>> canonical_key(const Word& w) const;
    bool decides_everything() const { return mode_ != Mode::fallback; }
    const TietzeResult& simplified() const { return t_; }
    const std::optional<CosetTable>& regular() const { return regular_; }

private:
    enum class Mode { trivial, free_product, finite, abelian, fallback };
    Verdict abelian_test(const Word& simplified_word) const;  // no / unknown (or yes when abelian)
    Verdict dehn(const Word& w) const;

    Mode mode_ = Mode::fallback;
    TietzeResult t_;
    std::vector<long long> cyclic_order_;  // free_product mode: 0 means infinite
    std::optional<CosetTable> regular_;
    SmithForm smith_;  // of the simplified relation matrix, with transforms
    std::vector<Word> dehn_rules_;
};

Verdict word_is_trivial(const Presentation& p, const Word& w, long long max_cosets = 100'000);

}  // namespace gtop
