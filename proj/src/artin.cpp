#include "hsz/artin.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>

namespace hsz {

namespace {

void check_strands(int strands) {
    if (strands < 2) {
        throw InvalidInput("braid word needs at least 2 strands, got " + std::to_string(strands));
    }
}

void check_genus(int genus) {
    if (genus < 1) {
        throw InvalidInput("genus must be >= 1, got " + std::to_string(genus));
    }
}

std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    check_strands(strands_);
    for (const auto& l : letters_) {
        if (l.index < 1 || l.index > strands_ - 1) {
            throw InvalidInput("generator index " + std::to_string(l.index) + " out of range 1.." +
                               std::to_string(strands_ - 1));
        }
        if (l.sign != 1 && l.sign != -1) {
            throw InvalidInput("letter sign must be +1 or -1");
        }
    }
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
    return BraidWord(strands, {Letter{index, sign}});
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    BraidWord out = *this;
    out *= rhs;
    return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
    if (rhs.strands_ != strands_) {
        throw InvalidInput("cannot concatenate words on " + std::to_string(strands_) + " and " +
                           std::to_string(rhs.strands_) + " strands");
    }
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

BraidWord BraidWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back({it->index, -it->sign});
    }
    return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
    const BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out(strands_);
    for (int i = 0; i < std::abs(k); ++i) {
        out *= base;
    }
    return out;
}

std::string BraidWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i].sign > 0 ? 't' : 'T';
        out += std::to_string(letters_[i].index);
    }
    return out;
}

BraidWord parse_word(std::string_view text, int strands) {
    check_strands(strands);
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        const std::size_t end = std::min(text.find(' ', pos), text.size());
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;

        if (token.size() < 2 || (token[0] != 't' && token[0] != 'T') ||
            !std::all_of(token.begin() + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InvalidInput("unknown token '" + std::string(token) + "'");
        }
        int index = 0;
        const auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InvalidInput("generator index too large in '" + std::string(token) + "'");
        }
        if (index < 1 || index > strands - 1) {
            throw InvalidInput("generator index " + std::to_string(index) + " out of range 1.." +
                               std::to_string(strands - 1));
        }
        letters.push_back({index, token[0] == 't' ? 1 : -1});
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return BraidWord(w.strands(), std::move(stack));
}

std::int64_t deg(const BraidWord& w) {
    std::int64_t d = 0;
    for (const auto& l : w.letters()) d += l.sign;
    return d;
}

// ---------------------------------------------------------------------------
// Artin graphs

ArtinGraph::ArtinGraph(std::vector<int> vertices) {
    for (int v : vertices) add_vertex(v);
}

void ArtinGraph::add_vertex(int v) {
    if (v < 1) throw InvalidInput("vertex ids must be positive, got " + std::to_string(v));
    if (has_vertex(v)) throw InvalidInput("duplicate vertex id " + std::to_string(v));
    vertices_.push_back(v);
}

bool ArtinGraph::has_vertex(int v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

void ArtinGraph::add_edge(int i, int j, int multiplicity) {
    if (i == j) throw InvalidInput("loop at vertex " + std::to_string(i));
    if (!has_vertex(i) || !has_vertex(j)) throw InvalidInput("edge endpoint is not a vertex");
    if (multiplicity < 1) throw InvalidInput("edge multiplicity must be >= 1");
    edges_[ordered(i, j)] += multiplicity;
}

int ArtinGraph::multiplicity(int i, int j) const {
    const auto it = edges_.find(ordered(i, j));
    return it == edges_.end() ? 0 : it->second;
}

std::vector<int> ArtinGraph::neighbours(int v) const {
    std::vector<int> out;
    for (const auto& [e, k] : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    return out;
}

ArtinGraph path_graph(int n) {
    ArtinGraph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(i);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

std::vector<Relation> artin_relations(const ArtinGraph& graph) {
    const auto& vs = graph.vertices();
    int strands = 2;
    for (int v : vs) strands = std::max(strands, v + 1);

    auto alternating = [strands](int a, int b, int length) {
        std::vector<Letter> letters;
        for (int k = 0; k < length; ++k) letters.push_back({k % 2 == 0 ? a : b, 1});
        return BraidWord(strands, std::move(letters));
    };

    std::vector<Relation> out;
    for (std::size_t x = 0; x < vs.size(); ++x) {
        for (std::size_t y = x + 1; y < vs.size(); ++y) {
            const int i = std::min(vs[x], vs[y]);
            const int j = std::max(vs[x], vs[y]);
            const int length = graph.multiplicity(i, j) + 2;
            out.push_back({alternating(i, j, length), alternating(j, i, length)});
        }
    }
    return out;
}

BraidWord h_word(int genus) {
    check_genus(genus);
    std::vector<Letter> letters;
    for (int i = 1; i <= 2 * genus + 1; ++i) letters.push_back({i, 1});
    return BraidWord(2 * genus + 2, std::move(letters));
}

BraidWord hbar_word(int genus) {
    check_genus(genus);
    std::vector<Letter> letters;
    for (int i = 2 * genus + 1; i >= 1; --i) letters.push_back({i, 1});
    return BraidWord(2 * genus + 2, std::move(letters));
}

KernelGenerators kernel_generators(int genus) {
    const BraidWord h = h_word(genus);
    const BraidWord hhbar = h * hbar_word(genus);
    return {h.power(2 * genus + 1) * hhbar.inverse(), h.power(2 * genus + 2)};
}

// ---------------------------------------------------------------------------
// Cochains

void Cochain1::set(int i, int j, std::int64_t value) {
    if (i == j) throw InvalidInput("cochain entry on a loop");
    values_[ordered(i, j)] = i < j ? value : -value;
}

std::int64_t Cochain1::at(int i, int j) const {
    const auto it = values_.find(ordered(i, j));
    if (it == values_.end()) return 0;
    return i < j ? it->second : -it->second;
}

Cochain1 Cochain1::from_oriented(const std::vector<std::tuple<int, int, std::int64_t>>& entries) {
    Cochain1 out;
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j, v] : entries) {
        if (seen.contains(ordered(i, j)) && out.at(i, j) != v) {
            throw InvalidInput("1-cochain is not antisymmetric on edge [" + std::to_string(i) + "," +
                               std::to_string(j) + "]");
        }
        seen.insert(ordered(i, j));
        out.set(i, j, v);
    }
    return out;
}

Cochain1 coboundary(const ArtinGraph& graph, const Cochain0& m) {
    Cochain1 out;
    for (const auto& [e, k] : graph.edges()) {
        out.set(e.first, e.second, m.at(e.second) - m.at(e.first));
    }
    return out;
}

Cochain0 solve_coboundary(const ArtinGraph& graph, const Cochain1& n) {
    for (const auto& [e, k] : graph.edges()) {
        if (k != 1) {
            throw Unsupported("coboundary solver needs a simply-laced graph; edge [" +
                              std::to_string(e.first) + "," + std::to_string(e.second) +
                              "] has multiplicity " + std::to_string(k));
        }
    }
    for (const auto& [e, v] : n.values()) {
        if (graph.multiplicity(e.first, e.second) == 0 && v != 0) {
            throw InvalidInput("1-cochain has a value on a non-edge [" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + "]");
        }
    }

    // Breadth-first propagation from the first vertex of each component;
    // meeting an already-labelled non-parent vertex means a cycle.
    Cochain0 m;
    std::map<int, int> parent;
    for (int root : graph.vertices()) {
        if (m.contains(root)) continue;
        m[root] = 0;
        parent[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop();
            for (int j : graph.neighbours(i)) {
                if (j == parent[i]) continue;
                if (m.contains(j)) throw Unsupported("coboundary solver needs a tree; the graph has a cycle");
                m[j] = m[i] + n.at(i, j);
                parent[j] = i;
                queue.push(j);
            }
        }
    }
    return m;
}

}  // namespace hsz
