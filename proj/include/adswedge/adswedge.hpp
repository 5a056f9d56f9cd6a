#ifndef ADSWEDGE_ADSWEDGE_HPP
#define ADSWEDGE_ADSWEDGE_HPP

// Core modules. JSON import/export, reports and the check suites live in
// spectral_json.hpp, report.hpp and suites.hpp, which need nlohmann_json.

#include <adswedge/lie_group.hpp>
#include <adswedge/ads_geometry.hpp>
#include <adswedge/holography.hpp>
#include <adswedge/chart.hpp>
#include <adswedge/net2d.hpp>
#include <adswedge/spectral.hpp>
#include <adswedge/gegenbauer.hpp>
#include <adswedge/freefield.hpp>

#endif // ADSWEDGE_ADSWEDGE_HPP
