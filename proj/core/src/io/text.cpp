#include "floodgrid/io/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "floodgrid/error.hpp"

namespace floodgrid::io {

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

bool parse_double(std::string_view token, double &out) {
    if (token.empty()) return false;
    if (token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return false;
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw ParseError(path.string() + ": read failed");
    return ss.str();
}

void write_files_atomically(const std::filesystem::path &dir,
                            const std::vector<std::pair<std::string, std::string>> &files) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    std::vector<fs::path> temps;
    auto cleanup = [&] {
        std::error_code ec;
        for (const auto &t : temps) fs::remove(t, ec);
    };

    try {
        for (const auto &[name, content] : files) {
            fs::path tmp = dir / ("." + name + ".tmp");
            temps.push_back(tmp);
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            out.close();
            if (!out) throw Error("cannot write " + tmp.string());
        }
    } catch (...) {
        cleanup();
        throw;
    }

    for (std::size_t i = 0; i < files.size(); ++i) fs::rename(temps[i], dir / files[i].first);
}

} // namespace floodgrid::io
