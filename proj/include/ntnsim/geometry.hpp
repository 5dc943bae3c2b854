#pragma once

#include "ntnsim/rng.hpp"

namespace ntnsim {

constexpr double kEarthRadiusM = 6371e3;
constexpr double kSpeedOfLightMps = 299792458.0;

struct GeoPosition {
    double lat_deg = 0.0;  // [-90, 90]
    double lon_deg = 0.0;  // [-180, 180)
    double alt_m = 0.0;    // above mean sea level
};

// Earth-centered cartesian frame on a spherical Earth, meters.
struct Ecef {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Ecef to_ecef(const GeoPosition& p);
GeoPosition to_geo(const Ecef& e);

// Constant-altitude great-circle track, initially heading due west through
// the starting position. speed_mps is the along-track (orbital) speed.
struct SatelliteState {
    GeoPosition start;     // altitude = orbit height
    double speed_mps = 0.0;
};

GeoPosition propagate(const SatelliteState& sat, double t_s);

// Straight-line satellite-UE distance on the spherical Earth.
double slant_range_m(const GeoPosition& sat, const GeoPosition& ue);

// Angle between the local horizon plane at the UE and the UE->satellite
// ray, degrees in [-90, 90].
double elevation_angle_deg(const GeoPosition& sat, const GeoPosition& ue);

// Positional trigger for LOS-condition resampling: fires when any ECEF
// axis displacement of the satellite from the anchor exceeds cube_side_m.
struct LosAnchor {
    Ecef anchor;
    double cube_side_m = 3500.0;
};

bool los_resample_due(const LosAnchor& link, const Ecef& sat_now);

// Uniform placement on a disc of the given radius around a center point,
// on the local tangent plane.
GeoPosition place_on_disc(const GeoPosition& center, double radius_m, RngStream& rng);

} // namespace ntnsim
