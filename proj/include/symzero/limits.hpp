#pragma once

namespace symzero {

// Default caps. Each can be overridden through the environment variable
// named next to it; the variable is read on every call.
inline constexpr int kDefaultPTableCap = 100000;  // SYMZERO_PTABLE_CAP
inline constexpr int kDefaultScanCap = 20;        // SYMZERO_SCAN_CAP
inline constexpr int kDefaultType1Cap = 5000;     // SYMZERO_TYPE1_CAP

int ptable_cap();
int scan_cap();
int type1_cap();

}  // namespace symzero
