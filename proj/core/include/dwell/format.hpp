#pragma once

#include <string>

namespace dwell {

// Shortest decimal form at 15 significant digits, locale-independent.
std::string to_sig15(double v);

// Writes via a temp file in the same directory, then renames, so failures
// never leave a partial file behind.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace dwell
