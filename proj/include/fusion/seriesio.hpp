#pragma once

#include <string>

#include "fusion/growth.hpp"
#include "fusion/ring.hpp"

namespace fusion {

/// "%.6f" rendering used for every log2 column/field.
std::string format_log2(double v);

/// CSV with header exactly `n,support_size,dim_vn,log2_dim_vn`; dim_vn
/// in full decimal, log2 with 6 decimals.
std::string series_to_csv(const GrowthSeries& s);

/// JSON object carrying the same records; numeric strings for the exact
/// integer fields and the 6-decimal log2 field. Byte-identical across
/// runs for identical input.
std::string series_to_json(const Ring& ring, const GrowthSeries& s);

/// Readers for the two formats. Exact integer columns are restored
/// verbatim; log2 is recomputed from the dim column. Generators are not
/// recoverable from CSV and are left empty there. Throw Error on
/// malformed input.
GrowthSeries series_from_csv(const std::string& text);
GrowthSeries series_from_json(const Ring& ring, const std::string& text);

}  // namespace fusion
