// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace pshrink {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace pshrink
