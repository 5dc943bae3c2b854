#include "ntnsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ntnsim {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct Vec3 {
    double x, y, z;
};

Vec3 sub(const Ecef& a, const Ecef& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 normalized(const Vec3& v)
{
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

} // namespace

Ecef to_ecef(const GeoPosition& p)
{
    const double r = kEarthRadiusM + p.alt_m;
    const double lat = p.lat_deg * kDegToRad;
    const double lon = p.lon_deg * kDegToRad;
    return {r * std::cos(lat) * std::cos(lon),
            r * std::cos(lat) * std::sin(lon),
            r * std::sin(lat)};
}

GeoPosition to_geo(const Ecef& e)
{
    const double r = std::sqrt(e.x * e.x + e.y * e.y + e.z * e.z);
    GeoPosition p;
    p.lat_deg = std::asin(e.z / r) * kRadToDeg;
    p.lon_deg = std::atan2(e.y, e.x) * kRadToDeg;
    if (p.lon_deg >= 180.0) p.lon_deg -= 360.0;
    p.alt_m = r - kEarthRadiusM;
    return p;
}

GeoPosition propagate(const SatelliteState& sat, double t_s)
{
    const Ecef start = to_ecef(sat.start);
    const double r = kEarthRadiusM + sat.start.alt_m;
    const Vec3 radial = normalized({start.x, start.y, start.z});
    // Local east at the start point; west is its negation.
    const Vec3 east = normalized(cross({0.0, 0.0, 1.0}, radial));
    const Vec3 west{-east.x, -east.y, -east.z};
    const double theta = sat.speed_mps * t_s / r;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return to_geo({r * (radial.x * c + west.x * s),
                   r * (radial.y * c + west.y * s),
                   r * (radial.z * c + west.z * s)});
}

double slant_range_m(const GeoPosition& sat, const GeoPosition& ue)
{
    return norm(sub(to_ecef(sat), to_ecef(ue)));
}

double elevation_angle_deg(const GeoPosition& sat, const GeoPosition& ue)
{
    const Ecef ue_e = to_ecef(ue);
    const Vec3 up = normalized({ue_e.x, ue_e.y, ue_e.z});
    const Vec3 ray = sub(to_ecef(sat), ue_e);
    const double s = dot(up, ray) / norm(ray);
    return std::asin(std::clamp(s, -1.0, 1.0)) * kRadToDeg;
}

bool los_resample_due(const LosAnchor& link, const Ecef& sat_now)
{
    return std::abs(sat_now.x - link.anchor.x) > link.cube_side_m ||
           std::abs(sat_now.y - link.anchor.y) > link.cube_side_m ||
           std::abs(sat_now.z - link.anchor.z) > link.cube_side_m;
}

GeoPosition place_on_disc(const GeoPosition& center, double radius_m, RngStream& rng)
{
    const double r = radius_m * std::sqrt(rng.uniform());
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double east_m = r * std::cos(phi);
    const double north_m = r * std::sin(phi);
    GeoPosition p = center;
    p.lat_deg += (north_m / kEarthRadiusM) * kRadToDeg;
    p.lon_deg += (east_m / (kEarthRadiusM * std::cos(center.lat_deg * kDegToRad))) * kRadToDeg;
    return p;
}

} // namespace ntnsim
