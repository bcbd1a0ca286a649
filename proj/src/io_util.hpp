#pragma once

#include <string>

namespace dgcf {

// Whole-file text IO; raises IoError with the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace dgcf
