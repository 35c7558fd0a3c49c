#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "segaldyn/errors.hpp"

namespace segaldyn::strings {

/// A law: a named finite element set. Equivalences between laws are declared
/// data, each carrying its element identification.
struct Law {
    std::string id;
    std::vector<std::string> elements;
};

struct Equivalence {
    std::string id;
    std::string from;                              // law id
    std::string to;                                // law id
    std::map<std::string, std::string> bijection;  // injective partial map on elements
};

struct LawUniverse {
    std::vector<Law> laws;
    std::vector<Equivalence> equivalences;
};

void validate_universe(const LawUniverse& u);

/// A node (space id, element id); spaces are laws on the algebraic layer and
/// simplicial-set ids after a push.
struct Node {
    std::string space;
    std::string element;

    bool operator==(const Node& o) const { return space == o.space && element == o.element; }
    bool operator<(const Node& o) const {
        return space != o.space ? space < o.space : element < o.element;
    }
};

struct Edge {
    std::string id;
    Node a;
    Node b;

    bool closed() const { return a == b; }
};

/// The string graph: edges plus their reflexive-symmetric-transitive closure
/// kept in a union-find. Queries are const; build/join/split mutate.
class StringGraph {
public:
    void add_node(const Node& n);

    /// Adds the edge (idempotent on endpoint pairs: an existing edge between
    /// the same endpoints is returned instead).
    const Edge& add_edge(const std::string& id, const Node& a, const Node& b);

    bool has_edge(const std::string& id) const { return edge_by_id_.count(id) > 0; }
    const Edge& edge(const std::string& id) const;
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }

    bool connected(const Node& a, const Node& b) const;

    /// The closure partition as sorted classes of sorted nodes.
    std::vector<std::vector<Node>> partition() const;

private:
    std::size_t node_slot(const Node& n);
    std::size_t find(std::size_t i) const;

    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> edge_by_id_;
    std::map<std::pair<Node, Node>, std::size_t> edge_by_ends_;  // canonical (min,max) key
    std::vector<Node> nodes_;
    std::map<Node, std::size_t> node_index_;
    mutable std::vector<std::size_t> parent_;
};

/// One edge per identified pair of the declared equivalences, plus the
/// trivial closed string on every element.
StringGraph build_strings(const LawUniverse& u);

/// a~b joined with b~c gives a~c; the shared endpoint is found by matching
/// the edges' orientations. Folding a closed string onto itself is allowed.
const Edge& join(StringGraph& g, const std::string& gamma1, const std::string& gamma2);

/// Splits a~c at b into a~b and b~c; b must already be closure-equivalent
/// to a or to c.
std::pair<Edge, Edge> split(StringGraph& g, const std::string& gamma, const Node& b);

/// A stack's recorded action: law -> simplicial set, elementwise.
struct StackAction {
    std::string id;
    std::map<std::string, std::string> spaces;                           // law -> sset
    std::map<std::string, std::map<std::string, std::string>> elements;  // per law
};

/// A state's recorded action on the simplicial-set layer.
struct StateAction {
    std::string id;
    std::map<std::string, std::string> spaces;                           // sset -> sset
    std::map<std::string, std::map<std::string, std::string>> elements;  // per sset
};

Node push_node(const StackAction& f, const Node& n);
Node shift_node(const StateAction& z, const Node& n);

/// The image of an algebraic string in the simplicial-set layer.
Edge push_string(const StackAction& f, const Edge& gamma);

/// Moves a pushed string by a state of the system.
Edge shift_string(const StateAction& zeta, const Edge& s);

/// Pushes every edge of a graph; the result's closure is the image closure.
StringGraph push_graph(const StackAction& f, const StringGraph& g);

/// first then then: the composite state action.
StateAction compose_actions(const StateAction& then, const StateAction& first);

}  // namespace segaldyn::strings
