#include "kgraph/ontology.hpp"

#include <algorithm>

namespace kgraph {

std::string_view to_string(ViolationCode code) {
    switch (code) {
    case ViolationCode::UnknownKind: return "UnknownKind";
    case ViolationCode::IllegalDualKind: return "IllegalDualKind";
    case ViolationCode::MissingAttribute: return "MissingAttribute";
    case ViolationCode::DanglingEndpoint: return "DanglingEndpoint";
    case ViolationCode::SignatureViolation: return "SignatureViolation";
    }
    return "";
}

bool ValidationResult::has(ViolationCode code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [code](const Violation& v) { return v.code == code; });
}

std::string ValidationResult::describe() const {
    std::string out;
    for (const Violation& v : violations) {
        out += std::string(to_string(v.code));
        out += ": ";
        out += v.detail;
        out += '\n';
    }
    return out;
}

namespace {

void require_attribute(const Entity& e, EntityKind kind, std::string_view key,
                       ValidationResult& result) {
    const std::string* value = e.attribute(kind, key);
    if (!value || value->empty()) {
        result.violations.push_back(
            {ViolationCode::MissingAttribute,
             std::string(key) + " (entity " + std::to_string(e.id) + ")"});
    }
}

} // namespace

ValidationResult check_entity(const Entity& entity) {
    ValidationResult result;
    if (entity.kinds.empty()) {
        result.violations.push_back(
            {ViolationCode::UnknownKind, "entity " + std::to_string(entity.id) + " has no kind"});
        return result;
    }
    if (entity.kinds.size() > 1 && !entity.kinds.is_dual_location_organization()) {
        std::string detail = "entity " + std::to_string(entity.id) + " kinds {";
        for (EntityKind k : entity.kinds.values()) {
            detail += std::string(to_string(k)) + " ";
        }
        detail.back() = '}';
        result.violations.push_back({ViolationCode::IllegalDualKind, std::move(detail)});
        return result;
    }

    for (EntityKind kind : entity.kinds.values()) {
        if (kind == EntityKind::Individual) {
            require_attribute(entity, kind, kAttrFirstName, result);
            require_attribute(entity, kind, kAttrLastName, result);
            require_attribute(entity, kind, kAttrRole, result);
        } else {
            require_attribute(entity, kind, kAttrName, result);
        }
    }
    if (entity.summaries.empty()) {
        result.violations.push_back(
            {ViolationCode::MissingAttribute,
             "summary (entity " + std::to_string(entity.id) + ")"});
    }
    if (entity.origin_references.empty()) {
        result.violations.push_back(
            {ViolationCode::MissingAttribute,
             "origin_reference (entity " + std::to_string(entity.id) + ")"});
    }
    return result;
}

ValidationResult check_relation(const Relation& rel, const KnowledgeGraph& graph) {
    ValidationResult result;
    const Entity* from = graph.find_entity(rel.from_id);
    const Entity* to = graph.find_entity(rel.to_id);
    if (!from) {
        result.violations.push_back(
            {ViolationCode::DanglingEndpoint,
             "relation " + std::to_string(rel.id) + " from " + std::to_string(rel.from_id)});
    }
    if (!to) {
        result.violations.push_back(
            {ViolationCode::DanglingEndpoint,
             "relation " + std::to_string(rel.id) + " to " + std::to_string(rel.to_id)});
    }
    if (!from || !to) return result;

    RelationSignature sig = signature(rel.kind);
    if (!from->kinds.has(sig.from) || !to->kinds.has(sig.to)) {
        std::string detail = std::string(to_string(rel.kind)) + " (relation " +
                             std::to_string(rel.id) + "): found from={";
        for (EntityKind k : from->kinds.values()) detail += std::string(to_string(k)) + " ";
        detail.back() = '}';
        detail += " to={";
        for (EntityKind k : to->kinds.values()) detail += std::string(to_string(k)) + " ";
        detail.back() = '}';
        result.violations.push_back({ViolationCode::SignatureViolation, std::move(detail)});
    }
    return result;
}

ValidationResult check_graph(const KnowledgeGraph& graph) {
    ValidationResult result;
    for (const auto& [id, entity] : graph.entities()) {
        ValidationResult r = check_entity(entity);
        result.violations.insert(result.violations.end(), r.violations.begin(),
                                 r.violations.end());
    }
    for (const auto& [id, rel] : graph.relations()) {
        ValidationResult r = check_relation(rel, graph);
        result.violations.insert(result.violations.end(), r.violations.begin(),
                                 r.violations.end());
    }
    return result;
}

} // namespace kgraph
