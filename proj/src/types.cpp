#include "groupsense/types.hpp"

#include <cmath>

#include "groupsense/error.hpp"

namespace groupsense {

std::string to_string(LocationType t) {
    switch (t) {
        case LocationType::Administration: return "administration";
        case LocationType::Dining: return "dining";
        case LocationType::Health: return "health";
        case LocationType::Labs: return "labs";
        case LocationType::Landmark: return "landmark";
        case LocationType::Library: return "library";
        case LocationType::Parking: return "parking";
        case LocationType::Police: return "police";
        case LocationType::Recreation: return "recreation";
        case LocationType::Residential: return "residential";
        case LocationType::School: return "school";
        case LocationType::StudentOrganizations: return "student_organizations";
        case LocationType::Community: return "community";
        case LocationType::Entertainment: return "entertainment";
        case LocationType::Food: return "food";
        case LocationType::Nightlife: return "nightlife";
        case LocationType::Outdoors: return "outdoors";
        case LocationType::Shopping: return "shopping";
        case LocationType::Travel: return "travel";
        case LocationType::Other: return "other";
        case LocationType::Unkn: return "UNKN";
    }
    return "other";
}

LocationType location_type_from_string(const std::string& s) {
    if (s == "administration") return LocationType::Administration;
    if (s == "dining") return LocationType::Dining;
    if (s == "health" || s == "health center" || s == "health_center")
        return LocationType::Health;
    if (s == "labs") return LocationType::Labs;
    if (s == "landmark") return LocationType::Landmark;
    if (s == "library") return LocationType::Library;
    if (s == "parking") return LocationType::Parking;
    if (s == "police") return LocationType::Police;
    if (s == "recreation") return LocationType::Recreation;
    if (s == "residential") return LocationType::Residential;
    if (s == "school") return LocationType::School;
    if (s == "student_organizations" || s == "student organizations")
        return LocationType::StudentOrganizations;
    if (s == "community") return LocationType::Community;
    if (s == "entertainment") return LocationType::Entertainment;
    if (s == "food") return LocationType::Food;
    if (s == "nightlife") return LocationType::Nightlife;
    if (s == "outdoors") return LocationType::Outdoors;
    if (s == "shopping") return LocationType::Shopping;
    if (s == "travel") return LocationType::Travel;
    if (s == "other" || s == "others") return LocationType::Other;
    if (s == "UNKN" || s == "unkn") return LocationType::Unkn;
    throw DataError("unknown location type: '" + s + "'");
}

bool is_office_type(LocationType t) {
    return t == LocationType::Library || t == LocationType::Administration ||
           t == LocationType::Labs || t == LocationType::School;
}

std::string to_string(ActivityLabel a) {
    switch (a) {
        case ActivityLabel::Transition: return "transition";
        case ActivityLabel::Dining: return "dining";
        case ActivityLabel::Gym: return "gym";
        case ActivityLabel::Home: return "home";
        case ActivityLabel::Work: return "work";
        case ActivityLabel::Other: return "other";
    }
    return "other";
}

ActivityLabel activity_from_string(const std::string& s) {
    if (s == "transition") return ActivityLabel::Transition;
    if (s == "dining") return ActivityLabel::Dining;
    if (s == "gym") return ActivityLabel::Gym;
    if (s == "home") return ActivityLabel::Home;
    if (s == "work") return ActivityLabel::Work;
    if (s == "other" || s == "others") return ActivityLabel::Other;
    throw DataError("unknown activity label: '" + s + "'");
}

int activity_precedence(ActivityLabel a) {
    switch (a) {
        case ActivityLabel::Transition: return 0;
        case ActivityLabel::Dining: return 1;
        case ActivityLabel::Gym: return 2;
        case ActivityLabel::Home: return 3;
        case ActivityLabel::Work: return 4;
        case ActivityLabel::Other: return 5;
    }
    return 5;
}

std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::Associate: return "associate";
        case EventKind::Disassociate: return "disassociate";
        case EventKind::Reassociate: return "reassociate";
        case EventKind::Authenticate: return "authenticate";
        case EventKind::Deauthenticate: return "deauthenticate";
        case EventKind::Drift: return "drift";
        case EventKind::Checkin: return "checkin";
    }
    return "associate";
}

std::string to_string(Granularity g) {
    switch (g) {
        case Granularity::Floor: return "floor";
        case Granularity::Building: return "building";
        case Granularity::CheckinPeriod: return "checkin_period";
    }
    return "floor";
}

Granularity granularity_from_string(const std::string& s) {
    if (s == "floor") return Granularity::Floor;
    if (s == "building") return Granularity::Building;
    if (s == "checkin_period") return Granularity::CheckinPeriod;
    throw DataError("unknown granularity: '" + s + "'");
}

std::string LocationRef::key(Granularity g) const {
    switch (g) {
        case Granularity::Floor: return building + "/" + floor;
        case Granularity::Building: return building;
        case Granularity::CheckinPeriod: return unit;
    }
    return unit;
}

std::string LocationRef::label() const {
    if (building.empty() && floor.empty()) return unit;
    return building + "/" + floor + "/" + unit;
}

LocationRef location_from_label(const std::string& label) {
    LocationRef ref;
    const auto first = label.find('/');
    if (first == std::string::npos) {
        ref.unit = label;
        return ref;
    }
    const auto second = label.find('/', first + 1);
    if (second == std::string::npos) throw DataError("bad location label: '" + label + "'");
    ref.building = label.substr(0, first);
    ref.floor = label.substr(first + 1, second - first - 1);
    ref.unit = label.substr(second + 1);
    return ref;
}

bool operator==(const MobilityEvent& a, const MobilityEvent& b) {
    return a.user_id == b.user_id && a.device_id == b.device_id && a.timestamp == b.timestamp &&
           a.kind == b.kind && a.location.same_place(b.location) &&
           a.location.loc_type == b.location.loc_type && a.location.has_geo == b.location.has_geo &&
           (!a.location.has_geo ||
            (a.location.lat == b.location.lat && a.location.lon == b.location.lon));
}

}  // namespace groupsense
