#pragma once

#include <string>
#include <vector>

#include "groupsense/time_util.hpp"

namespace groupsense {

// Campus categories plus the check-in (LBSN) categories. "other" is shared;
// "UNKN" marks interpolated gap entries only.
enum class LocationType {
    Administration,
    Dining,
    Health,
    Labs,
    Landmark,
    Library,
    Parking,
    Police,
    Recreation,
    Residential,
    School,
    StudentOrganizations,
    Community,
    Entertainment,
    Food,
    Nightlife,
    Outdoors,
    Shopping,
    Travel,
    Other,
    Unkn,
};

std::string to_string(LocationType t);
LocationType location_type_from_string(const std::string& s);  // throws DataError

// Office-class buildings for the work rule.
bool is_office_type(LocationType t);

enum class ActivityLabel { Transition, Dining, Gym, Home, Work, Other };

std::string to_string(ActivityLabel a);
ActivityLabel activity_from_string(const std::string& s);  // throws DataError

// Rule precedence used for tie-breaking modal activities: transition first,
// then dining, gym, home, work, other.
int activity_precedence(ActivityLabel a);

enum class EventKind {
    Associate,
    Disassociate,
    Reassociate,
    Authenticate,
    Deauthenticate,
    Drift,
    Checkin,
};

std::string to_string(EventKind k);

enum class Granularity { Floor, Building, CheckinPeriod };

std::string to_string(Granularity g);
Granularity granularity_from_string(const std::string& s);  // throws DataError

struct LocationRef {
    std::string building;  // empty for check-in refs
    std::string floor;     // empty for check-in refs
    std::string unit;      // AP name or location_ID
    double lat = 0.0;
    double lon = 0.0;
    bool has_geo = false;
    LocationType loc_type = LocationType::Other;

    bool is_unknown() const { return loc_type == LocationType::Unkn; }

    // Identity of the place this ref occupies at a given matching granularity.
    std::string key(Granularity g) const;

    // Full identity: "building/floor/unit" for WiFi refs, bare unit otherwise.
    std::string label() const;

    bool same_place(const LocationRef& o) const {
        return building == o.building && floor == o.floor && unit == o.unit;
    }
};

// Inverse of LocationRef::label(); geo and loc_type are not encoded.
LocationRef location_from_label(const std::string& label);

struct MobilityEvent {
    std::string user_id;
    std::string device_id;
    TimePoint timestamp = 0;
    LocationRef location;
    EventKind kind = EventKind::Associate;
};

bool operator==(const MobilityEvent& a, const MobilityEvent& b);

struct TrajectoryEntry {
    LocationRef location;
    TimePoint start = 0;
    TimePoint end = 0;
    ActivityLabel activity = ActivityLabel::Other;
};

// One device stream of one user. Devices of the same user are kept as
// parallel trajectories and merged at the co-occurrence level.
struct Trajectory {
    std::string user_id;
    std::string device_id;
    std::vector<TrajectoryEntry> entries;
};

}  // namespace groupsense
