#pragma once
// Fixed ontology: four entity kinds, seven relation kinds with typed
// endpoints, and the closed nature vocabularies.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgraph {

enum class EntityKind : std::uint8_t {
    Individual = 0,
    Event = 1,
    Location = 2,
    Organization = 3,
};

inline constexpr std::array<EntityKind, 4> kAllEntityKinds = {
    EntityKind::Individual,
    EntityKind::Event,
    EntityKind::Location,
    EntityKind::Organization,
};

enum class RelationKind : std::uint8_t {
    IndividualIsRelatedToOrganization = 0,
    IndividualIsRelatedToEvent = 1,
    OrganizationWasPresentAtLocation = 2,
    OrganizationIsPartOfOrganization = 3,
    OrganizationIsRelatedToEvent = 4,
    EventOccursAtLocation = 5,
    LocationIsContainedInLocation = 6,
};

inline constexpr std::array<RelationKind, 7> kAllRelationKinds = {
    RelationKind::IndividualIsRelatedToOrganization,
    RelationKind::IndividualIsRelatedToEvent,
    RelationKind::OrganizationWasPresentAtLocation,
    RelationKind::OrganizationIsPartOfOrganization,
    RelationKind::OrganizationIsRelatedToEvent,
    RelationKind::EventOccursAtLocation,
    RelationKind::LocationIsContainedInLocation,
};

struct RelationSignature {
    EntityKind from;
    EntityKind to;
};

RelationSignature signature(RelationKind kind);

std::string_view to_string(EntityKind kind);   // "individual", "event", ...
std::string_view to_string(RelationKind kind); // "IndividualIsRelatedToOrganization", ...
std::optional<EntityKind> entity_kind_from_string(std::string_view s);
std::optional<RelationKind> relation_kind_from_string(std::string_view s);

// Set of entity kinds carried by one node. Only singletons and the
// {Location, Organization} pair are legal graph content; the set type
// itself does not enforce that (validation does).
class KindSet {
public:
    KindSet() = default;
    explicit KindSet(EntityKind k) : bits_(bit(k)) {}

    static KindSet dual_location_organization() {
        KindSet s;
        s.add(EntityKind::Location);
        s.add(EntityKind::Organization);
        return s;
    }

    bool has(EntityKind k) const { return (bits_ & bit(k)) != 0; }
    void add(EntityKind k) { bits_ |= bit(k); }
    void remove(EntityKind k) { bits_ &= static_cast<std::uint8_t>(~bit(k)); }
    std::size_t size() const;
    bool empty() const { return bits_ == 0; }
    bool is_single() const { return size() == 1; }
    bool is_dual_location_organization() const {
        return *this == dual_location_organization();
    }
    // Kinds present, in fixed Individual/Event/Location/Organization order.
    std::vector<EntityKind> values() const;
    bool intersects(const KindSet& other) const { return (bits_ & other.bits_) != 0; }

    bool operator==(const KindSet& other) const = default;

private:
    static std::uint8_t bit(EntityKind k) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
    }
    std::uint8_t bits_ = 0;
};

// Attribute keys.
inline constexpr std::string_view kAttrFirstName = "firstName";
inline constexpr std::string_view kAttrLastName = "lastName";
inline constexpr std::string_view kAttrRole = "role";
inline constexpr std::string_view kAttrName = "name";
inline constexpr std::string_view kAttrNature = "nature";
inline constexpr std::string_view kAttrDate = "date";

// Sentinels.
inline constexpr std::string_view kUndefined = "undefined";
inline constexpr std::string_view kRoleUnspecified = "unspecified";
inline constexpr std::string_view kNatureOther = "other";

// Location natures are totally ordered country > city > street > building;
// rank grows coarser: building=0, street=1, city=2, country=3.
// "undefined" (and anything else) has no rank.
std::optional<int> location_nature_rank(std::string_view nature);
bool is_location_nature(std::string_view nature); // rankable or "undefined"

// Closed vocabulary for the IndividualIsRelatedToOrganization nature.
bool is_individual_organization_nature(std::string_view nature);
inline constexpr std::array<std::string_view, 4> kIndividualOrganizationNatures = {
    "affected by", "member", "chief", "other"};

// Relation kinds whose edges form the transitive subgraphs (the only
// places directed cycles can occur, given the signature table).
inline constexpr std::array<RelationKind, 2> kTransitiveRelationKinds = {
    RelationKind::OrganizationIsPartOfOrganization,
    RelationKind::LocationIsContainedInLocation,
};

} // namespace kgraph
