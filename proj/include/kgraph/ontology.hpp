#pragma once
// Validation of graph content against the fixed ontology.

#include "kgraph/graph.hpp"
#include "kgraph/kinds.hpp"

#include <string>
#include <vector>

namespace kgraph {

enum class ViolationCode {
    UnknownKind,
    IllegalDualKind,
    MissingAttribute,
    DanglingEndpoint,
    SignatureViolation,
};

std::string_view to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string detail;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationCode code) const;
    std::string describe() const; // one line per violation
};

// Accepts iff the kind set is a single kind or {Location, Organization},
// required attributes are present (Individual: firstName, lastName, role;
// Event/Location/Organization: name, under each kind carried), the
// summary list is nonempty and at least one origin reference exists.
ValidationResult check_entity(const Entity& entity);

// Accepts iff both endpoints exist in the graph and their kind sets
// include the relation signature's from/to kinds.
ValidationResult check_relation(const Relation& rel, const KnowledgeGraph& graph);

// Every entity and relation in the graph.
ValidationResult check_graph(const KnowledgeGraph& graph);

} // namespace kgraph
