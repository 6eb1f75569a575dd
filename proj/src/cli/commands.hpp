// commands.hpp: dataset builders behind the subcommands

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "tidisc/scan.hpp"

namespace tidisc::cli {

/// CSV columns t,I,C,D in display time units; metadata carries transition_time when the
/// first exchange falls inside the grid.
Dataset run_trace(const RunConfig& cfg, int workers = 1);

/// {status, transition_time, horizon, units, ...}: transition_time is a number for a
/// frozen point, "time-invariant" when certified, null when inconclusive.
/// Requires 0 < m < 1 (0 < c < 1 for the correlated model).
json run_transition(const RunConfig& cfg, BoundaryRule rule = BoundaryRule::LongTime);

enum class ScanKind { Dephasing, Correlated, Landscape };

std::string to_string(ScanKind kind);
ScanKind scan_kind_from_string(const std::string& name);

/// Axes name RunConfig parameters; the landscape uses x = s and y = ω_c t.
struct ScanConfig {
    ScanKind kind = ScanKind::Dephasing;
    AxisSpec x{"s", 2.0, 5.0, 64, true};
    AxisSpec y{"m", 0.0, 0.5, 64, true};
    RunConfig base = RunConfig::defaults(Model::Dephasing);
    BoundaryRule rule = BoundaryRule::LongTime;
    std::string preset;
};

/// fig2a, fig2b, fig7a, fig7b, fig7c, fig7d.
ScanConfig scan_preset(const std::string& name);
const std::vector<std::string>& scan_preset_names();

/// Long-format CSV x,y,label, x-major.
Dataset run_scan(const ScanConfig& cfg, int workers = 1);
RegionMap region_map(const ScanConfig& cfg, int workers = 1);

/// Rebuilds a trace or scan job from dataset metadata.
std::variant<RunConfig, ScanConfig> job_from_metadata(const json& metadata);

struct FigurePanel {
    std::string stem; // e.g. "fig5b"
    std::variant<RunConfig, ScanConfig> job;
};

/// Panels of figure n ∈ [1, 7]; throws InvalidParameter otherwise.
std::vector<FigurePanel> figure_panels(int n);

Dataset run_job(const std::variant<RunConfig, ScanConfig>& job, int workers = 1);

} // namespace tidisc::cli
