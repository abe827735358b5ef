#include "fixpoint/serialize.hpp"

#include <sstream>

#include "fixpoint/error.hpp"

namespace fixpoint {

json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& s : p.coefficient_strings()) arr.push_back(s);
    return arr;
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw ParseError(0, "polynomial JSON must be an array of coefficient strings");
    std::vector<Rational> cs;
    for (const auto& c : j) {
        if (c.is_string()) cs.push_back(Rational::parse(c.get<std::string>()));
        else if (c.is_number_integer()) cs.emplace_back(c.get<long>());
        else throw ParseError(0, "coefficient must be a string or integer");
    }
    return Polynomial(std::move(cs));
}

json to_json(const AlgebraicNumber& a, int digits) {
    json j;
    j["defining"] = to_json(a.defining());
    j["lo"] = a.interval().lo.to_string();
    j["hi"] = a.interval().hi.to_string();
    j["approx"] = approx(a, digits);
    return j;
}

AlgebraicNumber algebraic_from_json(const json& j) {
    const Polynomial def = polynomial_from_json(j.at("defining"));
    const Rational lo = Rational::parse(j.at("lo").get<std::string>());
    const Rational hi = Rational::parse(j.at("hi").get<std::string>());
    return AlgebraicNumber::from_interval(def, lo, hi);
}

json to_json(const OrbitVerdict& v, const std::optional<OrbitTrace>& trace) {
    json j;
    j["verdict"] = verdict_name(v);
    if (const auto* s = std::get_if<verdict::Stationary>(&v)) {
        j["rank"] = s->rank;
        j["limit"] = s->limit.to_string();
    } else if (const auto* c = std::get_if<verdict::Cycle>(&v)) {
        j["entry"] = c->entry;
        j["period"] = c->period;
    } else if (const auto* d = std::get_if<verdict::CertifiedDivergent>(&v)) {
        j["step"] = d->step;
    } else if (const auto* n = std::get_if<verdict::CertifiedNonStationary>(&v)) {
        j["reason"] = to_string(n->reason);
    } else if (const auto* u = std::get_if<verdict::Undetermined>(&v)) {
        j["reason"] = to_string(u->reason);
    }
    if (trace) {
        json values = json::array();
        for (const auto& x : trace->values) values.push_back(x.to_string());
        j["trace"] = values;
    }
    return j;
}

json to_json(const ETree& tree, int digits) {
    json j;
    const Polynomial* p = tree.map ? tree.map->as_polynomial() : nullptr;
    j["polynomial"] = p ? to_json(*p) : json(nullptr);
    j["max_depth"] = tree.max_depth;
    j["e_empty"] = tree.e_empty;
    json levels = json::array();
    for (const auto& l : tree.levels) {
        json ids = json::array();
        for (auto id : l) ids.push_back(id);
        levels.push_back(ids);
    }
    j["levels"] = levels;
    json nodes = json::array();
    for (const auto& n : tree.nodes) {
        json jn;
        jn["id"] = n.id;
        jn["depth"] = n.depth;
        jn["parent"] = n.parent ? json(*n.parent) : json(nullptr);
        jn["value"] = to_json(n.value, digits);
        nodes.push_back(jn);
    }
    j["nodes"] = nodes;
    return j;
}

ETree tree_from_json(const json& j, PolyLimits limits) {
    ETree tree;
    tree.map = std::make_shared<PolynomialMap>(polynomial_from_json(j.at("polynomial")), limits);
    tree.max_depth = j.at("max_depth").get<std::size_t>();
    tree.e_empty = j.value("e_empty", false);
    for (const auto& l : j.at("levels")) tree.levels.push_back(l.get<std::vector<std::size_t>>());
    for (const auto& jn : j.at("nodes")) {
        std::optional<std::size_t> parent;
        if (!jn.at("parent").is_null()) parent = jn.at("parent").get<std::size_t>();
        const std::size_t id = jn.at("id").get<std::size_t>();
        if (id != tree.nodes.size()) throw ParseError(0, "node ids must be consecutive from 0");
        tree.nodes.push_back(ENode{id, jn.at("depth").get<std::size_t>(), parent, algebraic_from_json(jn.at("value"))});
    }
    return tree;
}

json to_json(const CrossValidationReport& r) {
    json j;
    j["seed"] = r.seed;
    j["max_depth"] = r.max_depth;
    j["samples"] = r.samples;
    j["e_empty"] = r.e_empty;
    json fps = json::array();
    for (const auto& f : r.fixed_points) fps.push_back(approx(f, 30));
    j["fixed_points"] = fps;
    j["e_subset_a"] = {{"nodes_checked", r.nodes_checked},
                       {"rational_nodes", r.rational_nodes},
                       {"irrational_nodes", r.irrational_nodes}};
    j["a_subset_e"] = {{"sampled", r.sampled.size()},
                       {"stationary", r.sampled_stationary},
                       {"stationary_beyond_depth", r.sampled_beyond_depth}};
    j["violations"] = r.violations;
    j["pass"] = r.passed();
    return j;
}

std::string decimal_midpoint(const Interval& iv, int digits) {
    return midpoint(iv.lo, iv.hi).to_decimal(digits);
}

json to_json(const e3036::LeveledRadical& r, int digits) {
    json j;
    j["family"] = e3036::to_string(r.expr.family);
    if (r.expr.family == e3036::Family::BaseSet) {
        j["value"] = r.expr.base_element.to_string();
    } else {
        j["signs"] = r.expr.sign_string();
    }
    j["expr"] = r.expr.render();
    j["approx"] = decimal_midpoint(e3036::radical_value(r.expr, digits + 2), digits);
    j["level"] = r.level;
    return j;
}

json to_json(const e3036::MatchReport& r) {
    json j;
    j["max_level"] = r.max_level;
    j["tolerance"] = r.tolerance.to_decimal(3);
    json levels = json::array();
    for (const auto& l : r.levels) {
        levels.push_back({{"level", l.level},
                          {"enumerated", l.enumerated},
                          {"tree_nodes", l.tree_nodes},
                          {"matched", l.matched},
                          {"unmatched_radicals", l.unmatched_radicals},
                          {"unmatched_nodes", l.unmatched_nodes}});
    }
    j["levels"] = levels;
    j["total_enumerated"] = r.total_enumerated();
    j["total_tree_nodes"] = r.total_tree_nodes();
    j["bijection"] = r.perfect();
    return j;
}

std::string to_dot(const ETree& tree) {
    std::ostringstream os;
    os << "digraph E {\n  rankdir=BT;\n";
    const Polynomial* p = tree.map ? tree.map->as_polynomial() : nullptr;
    if (p) os << "  label=\"P(x) = " << p->to_string() << "\";\n";
    for (const auto& n : tree.nodes) {
        os << "  n" << n.id << " [label=\"" << approx(n.value, 12) << "\"";
        if (n.depth == 0) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (const auto& n : tree.nodes) {
        if (n.parent) os << "  n" << n.id << " -> n" << *n.parent << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_csv(const ETree& tree, int digits) {
    std::ostringstream os;
    os << "id,depth,parent,lo,hi,approx\n";
    for (const auto& n : tree.nodes) {
        os << n.id << ',' << n.depth << ',' << (n.parent ? std::to_string(*n.parent) : std::string()) << ','
           << n.value.interval().lo << ',' << n.value.interval().hi << ',' << approx(n.value, digits) << '\n';
    }
    return os.str();
}

} // namespace fixpoint
