// CSV, JSON and SVG serialization of snapshots and summaries.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "lollipop/observables.hpp"

namespace lollipop::io {

// Half-line rows stop at the last site whose probability exceeds this.
inline constexpr double kHalfLineCutoff = 1e-15;

/// Shortest "%.10g" rendering used by every CSV field.
std::string format_number(double value);

/// Number of half-line sites written: the last site with p > kHalfLineCutoff.
std::int64_t halfline_extent(const PositionDistribution& dist);

void write_distribution_csv(std::ostream& os, const PositionDistribution& dist);
void write_summary_csv(std::ostream& os, std::span<const SummaryRecord> records);

void write_distribution_json(std::ostream& os, const PositionDistribution& dist);
void write_summary_json(std::ostream& os, std::span<const SummaryRecord> records);

void write_cycle_svg(std::ostream& os, const PositionDistribution& dist);
void write_halfline_svg(std::ostream& os, const PositionDistribution& dist);

}  // namespace lollipop::io
