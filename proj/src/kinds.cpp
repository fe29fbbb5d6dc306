#include "kgraph/kinds.hpp"

#include <bit>

namespace kgraph {

RelationSignature signature(RelationKind kind) {
    switch (kind) {
    case RelationKind::IndividualIsRelatedToOrganization:
        return {EntityKind::Individual, EntityKind::Organization};
    case RelationKind::IndividualIsRelatedToEvent:
        return {EntityKind::Individual, EntityKind::Event};
    case RelationKind::OrganizationWasPresentAtLocation:
        return {EntityKind::Organization, EntityKind::Location};
    case RelationKind::OrganizationIsPartOfOrganization:
        return {EntityKind::Organization, EntityKind::Organization};
    case RelationKind::OrganizationIsRelatedToEvent:
        return {EntityKind::Organization, EntityKind::Event};
    case RelationKind::EventOccursAtLocation:
        return {EntityKind::Event, EntityKind::Location};
    case RelationKind::LocationIsContainedInLocation:
        return {EntityKind::Location, EntityKind::Location};
    }
    return {EntityKind::Individual, EntityKind::Individual}; // unreachable
}

std::string_view to_string(EntityKind kind) {
    switch (kind) {
    case EntityKind::Individual: return "individual";
    case EntityKind::Event: return "event";
    case EntityKind::Location: return "location";
    case EntityKind::Organization: return "organization";
    }
    return "";
}

std::string_view to_string(RelationKind kind) {
    switch (kind) {
    case RelationKind::IndividualIsRelatedToOrganization: return "IndividualIsRelatedToOrganization";
    case RelationKind::IndividualIsRelatedToEvent: return "IndividualIsRelatedToEvent";
    case RelationKind::OrganizationWasPresentAtLocation: return "OrganizationWasPresentAtLocation";
    case RelationKind::OrganizationIsPartOfOrganization: return "OrganizationIsPartOfOrganization";
    case RelationKind::OrganizationIsRelatedToEvent: return "OrganizationIsRelatedToEvent";
    case RelationKind::EventOccursAtLocation: return "EventOccursAtLocation";
    case RelationKind::LocationIsContainedInLocation: return "LocationIsContainedInLocation";
    }
    return "";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view s) {
    for (EntityKind k : kAllEntityKinds) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<RelationKind> relation_kind_from_string(std::string_view s) {
    for (RelationKind k : kAllRelationKinds) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::size_t KindSet::size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<EntityKind> KindSet::values() const {
    std::vector<EntityKind> out;
    for (EntityKind k : kAllEntityKinds) {
        if (has(k)) out.push_back(k);
    }
    return out;
}

std::optional<int> location_nature_rank(std::string_view nature) {
    if (nature == "building") return 0;
    if (nature == "street") return 1;
    if (nature == "city") return 2;
    if (nature == "country") return 3;
    return std::nullopt;
}

bool is_location_nature(std::string_view nature) {
    return nature == kUndefined || location_nature_rank(nature).has_value();
}

bool is_individual_organization_nature(std::string_view nature) {
    for (std::string_view v : kIndividualOrganizationNatures) {
        if (v == nature) return true;
    }
    return false;
}

} // namespace kgraph
