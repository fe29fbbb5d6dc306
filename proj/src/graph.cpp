#include "kgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace kgraph {

const std::string* Entity::attribute(EntityKind kind, std::string_view key) const {
    auto kit = attributes.find(kind);
    if (kit == attributes.end()) return nullptr;
    auto ait = kit->second.find(std::string(key));
    if (ait == kit->second.end()) return nullptr;
    return &ait->second;
}

void Entity::set_attribute(EntityKind kind, std::string_view key, std::string value) {
    attributes[kind][std::string(key)] = std::move(value);
}

std::string Entity::name(EntityKind kind) const {
    const std::string* n = attribute(kind, kAttrName);
    return n ? *n : std::string();
}

std::string Entity::display_name() const {
    if (kinds.has(EntityKind::Individual)) {
        const std::string* first = attribute(EntityKind::Individual, kAttrFirstName);
        const std::string* last = attribute(EntityKind::Individual, kAttrLastName);
        std::string out = first ? *first : std::string();
        if (last && !last->empty()) {
            if (!out.empty()) out += ' ';
            out += *last;
        }
        return out;
    }
    for (EntityKind k : kinds.values()) {
        std::string n = name(k);
        if (!n.empty()) return n;
    }
    return {};
}

std::optional<std::string> Entity::defined_nature(EntityKind kind) const {
    const std::string* n = attribute(kind, kAttrNature);
    if (!n || n->empty() || *n == kUndefined) return std::nullopt;
    return *n;
}

std::optional<std::string> Entity::defined_date() const {
    const std::string* d = attribute(EntityKind::Event, kAttrDate);
    if (!d || d->empty() || *d == kUndefined) return std::nullopt;
    return *d;
}

void absorb_payload(Entity& winner, const Entity& loser) {
    winner.summaries.insert(winner.summaries.end(), loser.summaries.begin(),
                            loser.summaries.end());
    winner.origin_references.insert(winner.origin_references.end(),
                                    loser.origin_references.begin(),
                                    loser.origin_references.end());
    for (const auto& [kind, attrs] : loser.attributes) {
        for (const auto& [key, value] : attrs) {
            auto& slot = winner.attributes[kind];
            slot.emplace(key, value); // no overwrite
        }
    }
}

void absorb_payload(Relation& winner, const Relation& loser) {
    if (loser.nature_defined()) {
        if (!winner.nature_defined()) {
            winner.nature = loser.nature;
        } else if (winner.nature != loser.nature) {
            std::string note = "alternate nature: " + loser.nature;
            if (std::find(winner.summaries.begin(), winner.summaries.end(), note) ==
                winner.summaries.end()) {
                winner.summaries.push_back(std::move(note));
            }
        }
    }
    if (loser.date_defined() &&
        (!winner.date_defined() || loser.date < winner.date)) {
        winner.date = loser.date;
    }
    winner.summaries.insert(winner.summaries.end(), loser.summaries.begin(),
                            loser.summaries.end());
    winner.origin_references.insert(winner.origin_references.end(),
                                    loser.origin_references.begin(),
                                    loser.origin_references.end());
}

EntityId KnowledgeGraph::add_entity(Entity e) {
    if (e.id == 0) e.id = next_entity_id_;
    if (entities_.count(e.id) != 0) {
        throw std::invalid_argument("duplicate entity id " + std::to_string(e.id));
    }
    next_entity_id_ = std::max(next_entity_id_, e.id + 1);
    EntityId id = e.id;
    entities_.emplace(id, std::move(e));
    return id;
}

RelationId KnowledgeGraph::add_relation(Relation r) {
    if (r.id == 0) r.id = next_relation_id_;
    if (relations_.count(r.id) != 0) {
        throw std::invalid_argument("duplicate relation id " + std::to_string(r.id));
    }
    next_relation_id_ = std::max(next_relation_id_, r.id + 1);
    RelationId id = r.id;
    relations_.emplace(id, std::move(r));
    return id;
}

const Entity* KnowledgeGraph::find_entity(EntityId id) const {
    auto it = entities_.find(id);
    return it == entities_.end() ? nullptr : &it->second;
}

Entity* KnowledgeGraph::find_entity(EntityId id) {
    auto it = entities_.find(id);
    return it == entities_.end() ? nullptr : &it->second;
}

const Relation* KnowledgeGraph::find_relation(RelationId id) const {
    auto it = relations_.find(id);
    return it == relations_.end() ? nullptr : &it->second;
}

Relation* KnowledgeGraph::find_relation(RelationId id) {
    auto it = relations_.find(id);
    return it == relations_.end() ? nullptr : &it->second;
}

bool KnowledgeGraph::erase_entity(EntityId id) { return entities_.erase(id) != 0; }

bool KnowledgeGraph::erase_relation(RelationId id) { return relations_.erase(id) != 0; }

std::vector<RelationId> KnowledgeGraph::relations_of_kind(RelationKind kind) const {
    std::vector<RelationId> out;
    for (const auto& [id, rel] : relations_) {
        if (rel.kind == kind) out.push_back(id);
    }
    return out;
}

std::vector<RelationId> KnowledgeGraph::relations_touching(EntityId id) const {
    std::vector<RelationId> out;
    for (const auto& [rid, rel] : relations_) {
        if (rel.from_id == id || rel.to_id == id) out.push_back(rid);
    }
    return out;
}

std::vector<EntityId> KnowledgeGraph::entities_of_kind(EntityKind kind) const {
    std::vector<EntityId> out;
    for (const auto& [id, ent] : entities_) {
        if (ent.kinds.has(kind)) out.push_back(id);
    }
    return out;
}

void KnowledgeGraph::retarget_relations(EntityId old_id, EntityId new_id) {
    for (auto& [rid, rel] : relations_) {
        if (rel.from_id == old_id) rel.from_id = new_id;
        if (rel.to_id == old_id) rel.to_id = new_id;
    }
}

std::size_t KnowledgeGraph::collapse_duplicate_relations() {
    std::map<std::tuple<RelationKind, EntityId, EntityId>, RelationId> seen;
    std::vector<RelationId> to_erase;
    for (auto& [rid, rel] : relations_) {
        auto key = std::make_tuple(rel.kind, rel.from_id, rel.to_id);
        auto [it, inserted] = seen.emplace(key, rid);
        if (!inserted) {
            absorb_payload(relations_.at(it->second), rel);
            to_erase.push_back(rid);
        }
    }
    for (RelationId rid : to_erase) relations_.erase(rid);
    return to_erase.size();
}

std::vector<std::string> KnowledgeGraph::reference_multiset() const {
    std::vector<std::string> out;
    for (const auto& [id, ent] : entities_) {
        out.insert(out.end(), ent.origin_references.begin(), ent.origin_references.end());
    }
    for (const auto& [id, rel] : relations_) {
        out.insert(out.end(), rel.origin_references.begin(), rel.origin_references.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kgraph
