#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ntnsim/geometry.hpp"
#include "ntnsim/rng.hpp"

using namespace ntnsim;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Places a satellite at the central angle matching the requested elevation
// seen from the UE, along the UE's meridian.
GeoPosition satellite_at_elevation(const GeoPosition& ue, double elevation_deg, double alt_m)
{
    const double r_orbit = kEarthRadiusM + alt_m;
    const double alpha = elevation_deg * kDeg;
    const double beta = std::acos(kEarthRadiusM / r_orbit * std::cos(alpha)) - alpha;
    return {ue.lat_deg + beta / kDeg, ue.lon_deg, alt_m};
}

double central_angle(const GeoPosition& a, const GeoPosition& b)
{
    const Ecef ea = to_ecef({a.lat_deg, a.lon_deg, 0.0});
    const Ecef eb = to_ecef({b.lat_deg, b.lon_deg, 0.0});
    const double dot = ea.x * eb.x + ea.y * eb.y + ea.z * eb.z;
    return std::acos(std::clamp(dot / (kEarthRadiusM * kEarthRadiusM), -1.0, 1.0));
}

} // namespace

TEST_CASE("propagate starts at the configured position")
{
    SatelliteState sat{{62.38, 20.00, 600e3}, 7560.0};
    const GeoPosition p = propagate(sat, 0.0);
    CHECK(p.lat_deg == doctest::Approx(62.38).epsilon(1e-9));
    CHECK(p.lon_deg == doctest::Approx(20.00).epsilon(1e-9));
    CHECK(p.alt_m == doctest::Approx(600e3).epsilon(1e-6));
}

TEST_CASE("propagate heads west: longitude strictly decreases")
{
    SatelliteState sat{{62.38, 20.00, 600e3}, 7560.0};
    double prev_lon = 20.00;
    for (double t = 1.0; t <= 10.0; t += 1.0) {
        const double lon = propagate(sat, t).lon_deg;
        CHECK(lon < prev_lon);
        prev_lon = lon;
    }
}

TEST_CASE("propagate ground distance matches the spherical oracle")
{
    SatelliteState sat{{62.38, 20.00, 600e3}, 7560.0};
    for (double t : {1.0, 5.0, 10.0, 60.0}) {
        const GeoPosition p = propagate(sat, t);
        const double ground_m = central_angle(sat.start, p) * kEarthRadiusM;
        const double expected =
            sat.speed_mps * t * kEarthRadiusM / (kEarthRadiusM + sat.start.alt_m);
        CHECK(ground_m == doctest::Approx(expected).epsilon(1e-3));
    }
}

TEST_CASE("slant range at nadir equals the orbit height")
{
    const GeoPosition ue{45.0, 10.0, 0.0};
    const GeoPosition sat{45.0, 10.0, 600e3};
    CHECK(slant_range_m(sat, ue) == doctest::Approx(600e3).epsilon(1e-9));
    // asin loses precision right at the zenith; allow a micro-degree.
    CHECK(elevation_angle_deg(sat, ue) == doctest::Approx(90.0).epsilon(1e-7));
}

TEST_CASE("slant range at the horizon matches sqrt((R+h)^2 - R^2)")
{
    const GeoPosition ue{0.0, 0.0, 0.0};
    const GeoPosition sat = satellite_at_elevation(ue, 0.0, 600e3);
    const double expected = std::sqrt(std::pow(kEarthRadiusM + 600e3, 2) -
                                      kEarthRadiusM * kEarthRadiusM);
    CHECK(slant_range_m(sat, ue) == doctest::Approx(expected).epsilon(1e-6));
    CHECK(expected == doctest::Approx(2830e3).epsilon(1e-3));
    CHECK(elevation_angle_deg(sat, ue) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("slant range at 30 degrees matches the closed-form oracle")
{
    const GeoPosition ue{10.0, 30.0, 0.0};
    const GeoPosition sat = satellite_at_elevation(ue, 30.0, 600e3);
    const double ratio = (kEarthRadiusM + 600e3) / kEarthRadiusM;
    const double alpha = 30.0 * kDeg;
    const double expected = kEarthRadiusM * (std::sqrt(ratio * ratio -
                                                       std::cos(alpha) * std::cos(alpha)) -
                                             std::sin(alpha));
    CHECK(expected == doctest::Approx(1075e3).epsilon(1e-3));
    CHECK(slant_range_m(sat, ue) == doctest::Approx(expected).epsilon(1e-6));
    // Round trip: the elevation recovered from the placed satellite.
    CHECK(elevation_angle_deg(sat, ue) == doctest::Approx(30.0).epsilon(1e-4));
}

TEST_CASE("slant range decreases as elevation grows")
{
    const GeoPosition ue{0.0, 0.0, 0.0};
    double prev = slant_range_m(satellite_at_elevation(ue, 5.0, 600e3), ue);
    for (double elev = 10.0; elev <= 90.0; elev += 5.0) {
        const double d = slant_range_m(satellite_at_elevation(ue, elev, 600e3), ue);
        CHECK(d < prev);
        CHECK(d >= 600e3 * (1.0 - 1e-9));
        prev = d;
    }
}

TEST_CASE("los resample cube triggers per axis")
{
    LosAnchor anchor{{1000.0, 2000.0, 3000.0}, 3500.0};
    CHECK_FALSE(los_resample_due(anchor, {1000.0, 2000.0, 3000.0}));
    CHECK(los_resample_due(anchor, {1000.0 + 3600.0, 2000.0, 3000.0}));
    // No single axis exceeds the side length even though the euclidean
    // displacement does.
    CHECK_FALSE(los_resample_due(anchor, {3000.0, 4000.0, 5000.0}));
}

TEST_CASE("disc placement stays within the radius")
{
    RngStream rng(3, "placement-test");
    const GeoPosition center{62.25, 25.74, 0.0};
    for (int i = 0; i < 500; ++i) {
        const GeoPosition p = place_on_disc(center, 30e3, rng);
        CHECK(central_angle(center, p) * kEarthRadiusM <= 30e3 * 1.001);
    }
}
