#include "floodgrid/io/ascii_grid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "floodgrid/error.hpp"
#include "floodgrid/io/text.hpp"

namespace floodgrid {
namespace {

struct Token {
    std::string_view text;
    std::size_t line = 0;   // 1-based
    std::size_t column = 0; // 1-based token position within the line
};

class Tokenizer {
  public:
    explicit Tokenizer(std::string_view text) : text_(text) {}

    std::optional<Token> next() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 0;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ >= text_.size()) return std::nullopt;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Token{text_.substr(start, pos_ - start), line_, ++column_};
    }

    std::optional<Token> peek() {
        auto saved = *this;
        auto t = next();
        *this = saved;
        return t;
    }

    std::size_t line() const { return line_; }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 0;
};

std::string where(const Token &t) {
    return "line " + std::to_string(t.line) + ", token " + std::to_string(t.column);
}

constexpr std::array<std::string_view, 6> kKeys{"ncols",     "nrows",    "xllcorner",
                                                "yllcorner", "cellsize", "nodata_value"};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool starts_alpha(std::string_view s) {
    return !s.empty() && std::isalpha(static_cast<unsigned char>(s.front()));
}

std::size_t parse_count(const Token &t, std::string_view key) {
    std::size_t v = 0;
    const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size())
        throw ParseError(where(t) + ": header '" + std::string(key) + "' needs a positive integer, got '" +
                         std::string(t.text) + "'");
    if (v == 0) throw ParseError(where(t) + ": header '" + std::string(key) + "' must be >= 1");
    return v;
}

double parse_value(const Token &t) {
    double v = 0.0;
    if (!io::parse_double(t.text, v))
        throw ParseError(where(t) + ": non-numeric token '" + std::string(t.text) + "'");
    return v;
}

} // namespace

void Raster::validate() const {
    if (ncols < 1 || nrows < 1) throw ValidationError("raster needs ncols >= 1 and nrows >= 1");
    if (!(cellsize > 0.0)) throw ValidationError("raster cellsize must be > 0");
    if (values.size() != ncols * nrows) throw ValidationError("raster value count mismatch");
}

Raster parse_ascii_grid(std::string_view text) {
    Tokenizer tok(text);
    std::array<std::optional<Token>, kKeys.size()> header{};

    while (true) {
        auto key_tok = tok.peek();
        if (!key_tok || !starts_alpha(key_tok->text)) break;
        tok.next();
        const std::string key = lower(key_tok->text);
        const auto it = std::find(kKeys.begin(), kKeys.end(), key);
        if (it == kKeys.end())
            throw ParseError(where(*key_tok) + ": unknown header key '" + std::string(key_tok->text) + "'");
        auto &slot = header[static_cast<std::size_t>(it - kKeys.begin())];
        if (slot) throw ParseError(where(*key_tok) + ": duplicate header key '" + key + "'");
        auto value_tok = tok.next();
        if (!value_tok || value_tok->line != key_tok->line)
            throw ParseError(where(*key_tok) + ": header key '" + key + "' has no value");
        slot = *value_tok;
    }

    for (std::size_t k = 0; k < kKeys.size(); ++k) {
        if (!header[k])
            throw ParseError("line " + std::to_string(tok.line()) + ": missing header key '" +
                             std::string(kKeys[k]) + "'");
    }

    Raster r;
    r.ncols = parse_count(*header[0], kKeys[0]);
    r.nrows = parse_count(*header[1], kKeys[1]);
    r.xllcorner = parse_value(*header[2]);
    r.yllcorner = parse_value(*header[3]);
    r.cellsize = parse_value(*header[4]);
    r.nodata_value = parse_value(*header[5]);
    if (!(r.cellsize > 0.0)) throw ParseError(where(*header[4]) + ": cellsize must be > 0");

    const std::size_t expected = r.ncols * r.nrows;
    r.values.reserve(expected);
    std::size_t found = 0;
    std::optional<Token> first_extra;
    while (auto t = tok.next()) {
        if (found < expected) {
            r.values.push_back(parse_value(*t));
        } else if (!first_extra) {
            first_extra = t;
        }
        ++found;
    }
    if (found != expected) {
        std::string msg = "value count mismatch: expected " + std::to_string(expected) + ", found " +
                          std::to_string(found);
        if (first_extra) msg = where(*first_extra) + ": " + msg;
        else msg = "line " + std::to_string(tok.line()) + ": " + msg;
        throw ParseError(msg);
    }
    return r;
}

std::string write_ascii_grid(const Raster &raster) {
    raster.validate();
    std::string out;
    out.reserve(raster.values.size() * 8 + 128);
    out += "ncols " + std::to_string(raster.ncols) + "\n";
    out += "nrows " + std::to_string(raster.nrows) + "\n";
    out += "xllcorner " + io::format_number(raster.xllcorner) + "\n";
    out += "yllcorner " + io::format_number(raster.yllcorner) + "\n";
    out += "cellsize " + io::format_number(raster.cellsize) + "\n";
    const std::string nodata = io::format_number(raster.nodata_value);
    out += "nodata_value " + nodata + "\n";
    for (std::size_t row = 0; row < raster.nrows; ++row) {
        for (std::size_t col = 0; col < raster.ncols; ++col) {
            if (col) out += ' ';
            const double v = raster.at(row, col);
            out += raster.is_nodata(v) ? nodata : io::format_number(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace floodgrid
