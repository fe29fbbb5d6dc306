#pragma once
// Entity, Relation and the KnowledgeGraph store. Stores are ordered by id
// so every iteration order (and therefore every serialized artifact) is
// deterministic.

#include "kgraph/kinds.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kgraph {

using EntityId = std::int64_t;
using RelationId = std::int64_t;

using AttributeMap = std::map<std::string, std::string>;

struct Entity {
    EntityId id = 0;
    KindSet kinds;
    // Kind-indexed so a merged Location+Organization node retains both
    // natures without loss.
    std::map<EntityKind, AttributeMap> attributes;
    std::vector<std::string> summaries;
    std::vector<std::string> origin_references;

    const std::string* attribute(EntityKind kind, std::string_view key) const;
    void set_attribute(EntityKind kind, std::string_view key, std::string value);

    // "name" attribute for the kind ("" when absent).
    std::string name(EntityKind kind) const;
    // Individuals: "firstName lastName"; otherwise the name under the
    // first kind present.
    std::string display_name() const;
    // nature attribute, nullopt when missing, empty or "undefined".
    std::optional<std::string> defined_nature(EntityKind kind) const;
    // Event date, nullopt when missing or "undefined".
    std::optional<std::string> defined_date() const;
};

struct Relation {
    RelationId id = 0;
    RelationKind kind = RelationKind::IndividualIsRelatedToOrganization;
    EntityId from_id = 0;
    EntityId to_id = 0;
    std::string nature; // "" = undefined
    std::string date;   // "" = undefined, else yyyy[-mm[-dd]]
    std::vector<std::string> summaries;
    std::vector<std::string> origin_references;

    bool nature_defined() const { return !nature.empty() && nature != kUndefined; }
    bool date_defined() const { return !date.empty() && date != kUndefined; }
};

// Payload union used by every merge in the project: summaries and
// origin references are appended (reference multisets are conserved,
// nothing deduplicated away), attribute maps union without overwriting
// the winner's values.
void absorb_payload(Entity& winner, const Entity& loser);
// Relation flavor: nature keeps the first-seen value and records a
// differing one in the summaries; date keeps the earliest defined.
void absorb_payload(Relation& winner, const Relation& loser);

class KnowledgeGraph {
public:
    // Assigns a fresh id when e.id == 0; rejects duplicate ids.
    EntityId add_entity(Entity e);
    RelationId add_relation(Relation r);

    const Entity* find_entity(EntityId id) const;
    Entity* find_entity(EntityId id);
    const Relation* find_relation(RelationId id) const;
    Relation* find_relation(RelationId id);

    bool erase_entity(EntityId id);   // does not touch incident relations
    bool erase_relation(RelationId id);

    const std::map<EntityId, Entity>& entities() const { return entities_; }
    const std::map<RelationId, Relation>& relations() const { return relations_; }

    std::size_t entity_count() const { return entities_.size(); }
    std::size_t relation_count() const { return relations_.size(); }

    std::vector<RelationId> relations_of_kind(RelationKind kind) const;
    std::vector<RelationId> relations_touching(EntityId id) const;
    std::vector<EntityId> entities_of_kind(EntityKind kind) const;

    // Rewrites every endpoint equal to old_id to new_id.
    void retarget_relations(EntityId old_id, EntityId new_id);

    // Collapses relations sharing (kind, from, to) into the lowest-id
    // one, absorbing payloads in ascending id order.
    std::size_t collapse_duplicate_relations();

    // All origin references over entities and relations, sorted (a
    // multiset fingerprint for conservation checks).
    std::vector<std::string> reference_multiset() const;

private:
    std::map<EntityId, Entity> entities_;
    std::map<RelationId, Relation> relations_;
    EntityId next_entity_id_ = 1;
    RelationId next_relation_id_ = 1;
};

} // namespace kgraph
