#include "segaldyn/strings.hpp"

#include <algorithm>
#include <set>

namespace segaldyn::strings {

void validate_universe(const LawUniverse& u) {
    std::map<std::string, std::set<std::string>> elements;
    for (const auto& law : u.laws) {
        if (elements.count(law.id)) throw_input("duplicate law '" + law.id + "'");
        auto& bucket = elements[law.id];
        for (const auto& e : law.elements)
            if (!bucket.insert(e).second)
                throw_input("duplicate element '" + e + "' in law '" + law.id + "'");
    }
    std::set<std::string> eq_ids;
    for (const auto& eq : u.equivalences) {
        if (!eq_ids.insert(eq.id).second) throw_input("duplicate equivalence '" + eq.id + "'");
        auto from = elements.find(eq.from);
        if (from == elements.end())
            throw_input("equivalence '" + eq.id + "' declares unknown law '" + eq.from + "'");
        auto to = elements.find(eq.to);
        if (to == elements.end())
            throw_input("equivalence '" + eq.id + "' declares unknown law '" + eq.to + "'");
        std::set<std::string> image;
        for (const auto& [a, b] : eq.bijection) {
            if (!from->second.count(a))
                throw_input("equivalence '" + eq.id + "' identifies unknown element '" + a + "' of '" +
                            eq.from + "'");
            if (!to->second.count(b))
                throw_input("equivalence '" + eq.id + "' identifies unknown element '" + b + "' of '" +
                            eq.to + "'");
            if (!image.insert(b).second)
                throw_input("equivalence '" + eq.id + "' is not injective at '" + b + "'");
        }
    }
}

// ---------------------------------------------------------------------------
// StringGraph

std::size_t StringGraph::node_slot(const Node& n) {
    auto it = node_index_.find(n);
    if (it != node_index_.end()) return it->second;
    std::size_t slot = nodes_.size();
    node_index_[n] = slot;
    nodes_.push_back(n);
    parent_.push_back(slot);
    return slot;
}

std::size_t StringGraph::find(std::size_t i) const {
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

void StringGraph::add_node(const Node& n) { node_slot(n); }

const Edge& StringGraph::add_edge(const std::string& id, const Node& a, const Node& b) {
    std::pair<Node, Node> key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto ends = edge_by_ends_.find(key);
    if (ends != edge_by_ends_.end()) return edges_[ends->second];

    std::size_t ia = node_slot(a);
    std::size_t ib = node_slot(b);
    parent_[find(ia)] = find(ib);

    std::size_t slot = edges_.size();
    edges_.push_back({id, a, b});
    edge_by_id_.emplace(id, slot);
    edge_by_ends_.emplace(key, slot);
    return edges_[slot];
}

const Edge& StringGraph::edge(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) throw_input("unknown string '" + id + "'");
    return edges_[it->second];
}

bool StringGraph::connected(const Node& a, const Node& b) const {
    auto ia = node_index_.find(a);
    auto ib = node_index_.find(b);
    if (ia == node_index_.end() || ib == node_index_.end())
        throw_input("node '" + a.space + ":" + a.element + "' or '" + b.space + ":" + b.element +
                    "' is not part of the string graph");
    return find(ia->second) == find(ib->second);
}

std::vector<std::vector<Node>> StringGraph::partition() const {
    std::map<std::size_t, std::vector<Node>> classes;
    for (std::size_t i = 0; i < nodes_.size(); ++i) classes[find(i)].push_back(nodes_[i]);
    std::vector<std::vector<Node>> out;
    out.reserve(classes.size());
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// operations

StringGraph build_strings(const LawUniverse& u) {
    validate_universe(u);
    StringGraph g;
    for (const auto& law : u.laws)
        for (const auto& e : law.elements) {
            Node n{law.id, e};
            g.add_node(n);
            g.add_edge("loop:" + law.id + ":" + e, n, n);
        }
    for (const auto& eq : u.equivalences)
        for (const auto& [a, b] : eq.bijection)
            g.add_edge(eq.id + ":" + a, Node{eq.from, a}, Node{eq.to, b});
    return g;
}

const Edge& join(StringGraph& g, const std::string& gamma1, const std::string& gamma2) {
    const Edge e1 = g.edge(gamma1);
    const Edge e2 = g.edge(gamma2);

    // Orientation-first matching: a~b with b~c, then the remaining ways to
    // share an endpoint.
    Node from, to;
    if (e1.b == e2.a) {
        from = e1.a;
        to = e2.b;
    } else if (e1.b == e2.b) {
        from = e1.a;
        to = e2.a;
    } else if (e1.a == e2.a) {
        from = e1.b;
        to = e2.b;
    } else if (e1.a == e2.b) {
        from = e1.b;
        to = e2.a;
    } else {
        throw_input("strings '" + gamma1 + "' and '" + gamma2 + "' share no endpoint");
    }
    return g.add_edge("join:" + gamma1 + "+" + gamma2, from, to);
}

std::pair<Edge, Edge> split(StringGraph& g, const std::string& gamma, const Node& b) {
    const Edge e = g.edge(gamma);
    if (!g.connected(b, e.a) && !g.connected(b, e.b))
        throw_input("cannot split '" + gamma + "' at '" + b.space + ":" + b.element +
                    "': it is equivalent to neither endpoint");
    Edge left = g.add_edge("split:" + gamma + ":l", e.a, b);
    Edge right = g.add_edge("split:" + gamma + ":r", b, e.b);
    return {left, right};
}

namespace {

const std::string& mapped_space(const std::map<std::string, std::string>& spaces,
                                const std::string& space, const std::string& who) {
    auto it = spaces.find(space);
    if (it == spaces.end())
        throw_input(who + " has no action on space '" + space + "'");
    return it->second;
}

const std::string& mapped_element(
    const std::map<std::string, std::map<std::string, std::string>>& elements,
    const std::string& space, const std::string& element, const std::string& who) {
    auto is = elements.find(space);
    if (is == elements.end())
        throw_input(who + " has no element action on space '" + space + "'");
    auto ie = is->second.find(element);
    if (ie == is->second.end())
        throw_input(who + " has no image for element '" + element + "' of '" + space + "'");
    return ie->second;
}

}  // namespace

Node push_node(const StackAction& f, const Node& n) {
    return {mapped_space(f.spaces, n.space, "stack '" + f.id + "'"),
            mapped_element(f.elements, n.space, n.element, "stack '" + f.id + "'")};
}

Node shift_node(const StateAction& z, const Node& n) {
    return {mapped_space(z.spaces, n.space, "state '" + z.id + "'"),
            mapped_element(z.elements, n.space, n.element, "state '" + z.id + "'")};
}

Edge push_string(const StackAction& f, const Edge& gamma) {
    return {"push:" + f.id + ":" + gamma.id, push_node(f, gamma.a), push_node(f, gamma.b)};
}

Edge shift_string(const StateAction& zeta, const Edge& s) {
    return {"shift:" + zeta.id + ":" + s.id, shift_node(zeta, s.a), shift_node(zeta, s.b)};
}

StringGraph push_graph(const StackAction& f, const StringGraph& g) {
    StringGraph out;
    for (const auto& n : g.nodes()) out.add_node(push_node(f, n));
    for (const auto& e : g.edges()) {
        Edge pushed = push_string(f, e);
        out.add_edge(pushed.id, pushed.a, pushed.b);
    }
    return out;
}

StateAction compose_actions(const StateAction& then, const StateAction& first) {
    StateAction out;
    out.id = then.id + "*" + first.id;
    for (const auto& [space, mid] : first.spaces)
        out.spaces[space] = mapped_space(then.spaces, mid, "state '" + then.id + "'");
    for (const auto& [space, table] : first.elements) {
        const std::string& mid = mapped_space(first.spaces, space, "state '" + first.id + "'");
        auto& bucket = out.elements[space];
        for (const auto& [e, img] : table)
            bucket[e] = mapped_element(then.elements, mid, img, "state '" + then.id + "'");
    }
    return out;
}

}  // namespace segaldyn::strings
