// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace liepool::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;  // bad flags or unreadable/invalid input
inline constexpr int kExitCap = 3;    // dimension / qubit / factor cap hit
inline constexpr int kExitStage = 4;  // model pipeline stage mismatch

/// Run one subcommand; args excludes the program name.  Reports go to the
/// --output path (stdout when omitted), diagnostics to stderr.
int run(const std::vector<std::string>& args);

}  // namespace liepool::cli
