#include "io_util.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace dgcf {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(ErrorCode::IoError, "cannot open " + path + " for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        raise(ErrorCode::IoError, "read failed on " + path);
    }
    return std::move(buffer).str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        raise(ErrorCode::IoError, "cannot open " + path + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        raise(ErrorCode::IoError, "write failed on " + path);
    }
}

} // namespace dgcf
