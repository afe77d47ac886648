#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace hsz {

/// Raised for malformed user input (bad tokens, out-of-range indices, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is asked to work outside its supported domain.
class Unsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// One generator letter t_i (sign +1) or t_i^{-1} (sign -1).
struct Letter {
    int index = 1;
    int sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the standard generators of the braid group on `strands` strands.
/// Words are read left to right and are never reduced implicitly.
class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<Letter> letters = {});

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// Concatenation; both words must live on the same number of strands.
    BraidWord operator*(const BraidWord& rhs) const;
    BraidWord& operator*=(const BraidWord& rhs);

    /// Letter order reversed, signs flipped.
    BraidWord inverse() const;
    /// k-fold concatenation; negative k uses the inverse.
    BraidWord power(int k) const;

    /// Textual form in the `t<k>` / `T<k>` syntax, single-space separated.
    std::string to_string() const;

    static BraidWord generator(int strands, int index, int sign = 1);

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

BraidWord parse_word(std::string_view text, int strands);
BraidWord free_reduce(const BraidWord& w);
std::int64_t deg(const BraidWord& w);

/// Graph defining an Artin system. Vertex ids are positive integers; an
/// absent pair has k_ij = 0.
class ArtinGraph {
public:
    ArtinGraph() = default;
    explicit ArtinGraph(std::vector<int> vertices);

    void add_vertex(int v);
    /// Adds `multiplicity` parallel edges between i and j.
    void add_edge(int i, int j, int multiplicity = 1);

    const std::vector<int>& vertices() const noexcept { return vertices_; }
    bool has_vertex(int v) const;
    /// k_ij, zero when i and j are not adjacent.
    int multiplicity(int i, int j) const;
    /// Unordered edges (i < j) with their multiplicities.
    const std::map<std::pair<int, int>, int>& edges() const noexcept { return edges_; }
    std::vector<int> neighbours(int v) const;

private:
    std::vector<int> vertices_;
    std::map<std::pair<int, int>, int> edges_;
};

/// Dynkin graph A_n: the path 1 - 2 - ... - n.
ArtinGraph path_graph(int n);

struct Relation {
    BraidWord lhs;
    BraidWord rhs;
};

/// One relation per unordered vertex pair: t_i t_j t_i ... = t_j t_i t_j ...,
/// both sides of length k_ij + 2.
std::vector<Relation> artin_relations(const ArtinGraph& graph);

BraidWord h_word(int genus);
BraidWord hbar_word(int genus);

struct KernelGenerators {
    BraidWord r1;  // h^{2g+1} (h hbar)^{-1}
    BraidWord r2;  // h^{2g+2}
};

KernelGenerators kernel_generators(int genus);

using Cochain0 = std::map<int, std::int64_t>;

/// Integer function on oriented edges with n[ji] = -n[ij]. Stored in the
/// orientation i < j.
class Cochain1 {
public:
    Cochain1() = default;

    /// Sets n[ij], and therefore n[ji] = -value.
    void set(int i, int j, std::int64_t value);
    /// n[ij]; zero for pairs never set.
    std::int64_t at(int i, int j) const;

    const std::map<std::pair<int, int>, std::int64_t>& values() const noexcept { return values_; }

    /// Builds a cochain from raw oriented entries, rejecting non-antisymmetric
    /// input (both orientations present with values that are not negatives).
    static Cochain1 from_oriented(const std::vector<std::tuple<int, int, std::int64_t>>& entries);

private:
    std::map<std::pair<int, int>, std::int64_t> values_;
};

/// (delta m)[ij] = m_j - m_i on every edge of the graph.
Cochain1 coboundary(const ArtinGraph& graph, const Cochain0& m);

/// Solves delta m = n on a forest with simple edges; the first vertex (in
/// vertex order) of each component gets m = 0.
Cochain0 solve_coboundary(const ArtinGraph& graph, const Cochain1& n);

}  // namespace hsz
