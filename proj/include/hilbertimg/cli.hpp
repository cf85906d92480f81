#pragma once

#include <ostream>
#include <span>
#include <string>

namespace hilbertimg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;  ///< I/O, parse and encoding failures
inline constexpr int exit_usage = 2;    ///< bad flags, config values or CSV schema

/// Largest order accepted by `curve` (tabular dump) and `encode`/`dataset`.
inline constexpr unsigned max_table_order = 10;
inline constexpr unsigned max_image_order = 12;

/// Runs the command line `args` (program name excluded):
///
///   curve   --order p [--dims 2] [--out file]
///   encode  <input> [--out dir] [encoding flags]
///   dataset <csv> --out dir [--seq-column c] [--label-column c] [--id-column c]
///           [--seed n] [--jobs n] [--no-stratify] [encoding flags]
///
/// Encoding flags: --order, --alphabet, --mode, --unknown, --overflow,
/// --normalization, --format, --encoder, --resolution, --config. Values from
/// a --config file apply unless the same flag is given on the command line.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hilbertimg::cli
