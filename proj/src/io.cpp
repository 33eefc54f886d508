#include "fractv/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace fractv {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

std::vector<double> parse_csv_line(const std::string& line, const std::string& path) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        const std::string cell = line.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(path, "ill-formed numeric cell '" + cell + "'");
        }
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return out;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Signal1D read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        const auto cells = parse_csv_line(line, path);
        if (cells.size() != 1) fail(path, "expected one value per line for a 1D signal");
        values.push_back(cells[0]);
    }
    if (values.size() < 3) fail(path, "need at least 3 nodes");
    Grid1D g = Grid1D::unit(static_cast<int>(values.size()) - 1);
    return Signal1D(g, std::move(values));
}

void write_signal_csv(const Signal1D& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");
    for (double v : w.values) out << format_double(v) << "\n";
    if (!out) fail(path, "write error");
}

Field2D read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        rows.push_back(parse_csv_line(line, path));
        if (rows.back().size() != rows.front().size()) fail(path, "ragged rows");
    }
    if (rows.size() < 3 || rows.front().size() < 3) fail(path, "need at least 3x3 nodes");
    const int nx = static_cast<int>(rows.front().size()) - 1;
    const int ny = static_cast<int>(rows.size()) - 1;
    Field2D u = Field2D::zeros(nx, ny);
    for (int iy = 0; iy <= ny; ++iy)
        for (int ix = 0; ix <= nx; ++ix) u.at(ix, iy) = rows[iy][ix];
    return u;
}

void write_field_csv(const Field2D& u, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");
    for (int iy = 0; iy <= u.grid.ny; ++iy) {
        for (int ix = 0; ix <= u.grid.nx; ++ix) {
            if (ix) out << ",";
            out << format_double(u.at(ix, iy));
        }
        out << "\n";
    }
    if (!out) fail(path, "write error");
}

namespace {

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.get()) != EOF && !std::isspace(c) && c != '#')
                tok.push_back(static_cast<char>(c));
            if (c == '#')
                while ((c = in.get()) != EOF && c != '\n') {
                }
            return tok;
        }
    }
    return tok;
}

}  // namespace

Field2D read_field_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    const std::string magic = pgm_token(in);
    if (magic != "P2" && magic != "P5") fail(path, "not a P2/P5 PGM file");
    int width = 0, height = 0, maxval = 0;
    try {
        width = std::stoi(pgm_token(in));
        height = std::stoi(pgm_token(in));
        maxval = std::stoi(pgm_token(in));
    } catch (const std::exception&) {
        fail(path, "ill-formed PGM header");
    }
    if (width < 3 || height < 3) fail(path, "need at least 3x3 pixels");
    if (maxval < 1 || maxval > 65535) fail(path, "unsupported maxval");

    Field2D u = Field2D::zeros(width - 1, height - 1);
    const auto store = [&](int idx, long value) {
        if (value < 0 || value > maxval) fail(path, "sample out of range");
        u.values[idx] = static_cast<double>(value) / maxval;
    };
    const int count = width * height;
    if (magic == "P2") {
        for (int i = 0; i < count; ++i) {
            const std::string tok = pgm_token(in);
            if (tok.empty()) fail(path, "truncated P2 data");
            store(i, std::stol(tok));
        }
    } else {
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> raw(static_cast<std::size_t>(count) * bytes);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size())) fail(path, "truncated P5 data");
        for (int i = 0; i < count; ++i) {
            const long v = bytes == 2 ? (long(raw[2 * i]) << 8) | raw[2 * i + 1] : raw[i];
            store(i, v);
        }
    }
    return u;
}

void write_field_pgm(const Field2D& u, const std::string& path, int maxval, bool binary) {
    if (maxval < 1 || maxval > 65535)
        throw std::invalid_argument("write_field_pgm: maxval must be in [1, 65535]");
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    const int width = u.grid.nx + 1, height = u.grid.ny + 1;
    out << (binary ? "P5" : "P2") << "\n" << width << " " << height << "\n" << maxval << "\n";
    const auto quantize = [&](double v) {
        const double c = std::clamp(v, 0.0, 1.0);
        return static_cast<int>(std::lround(c * maxval));
    };
    if (binary) {
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> raw;
        raw.reserve(static_cast<std::size_t>(width) * height * bytes);
        for (double v : u.values) {
            const int q = quantize(v);
            if (bytes == 2) raw.push_back(static_cast<unsigned char>(q >> 8));
            raw.push_back(static_cast<unsigned char>(q & 0xff));
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    } else {
        for (int iy = 0; iy < height; ++iy) {
            for (int ix = 0; ix < width; ++ix) {
                if (ix) out << " ";
                out << quantize(u.at(ix, iy));
            }
            out << "\n";
        }
    }
    if (!out) fail(path, "write error");
}

Field2D read_field_any(const std::string& path) {
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "pgm") return read_field_pgm(path);
    if (ext == "csv") return read_field_csv(path);
    fail(path, "unknown field format (expected .pgm or .csv)");
}

std::vector<double> parse_order_ladder(const std::string& spec) {
    std::vector<double> out;
    try {
        if (spec.find(':') != std::string::npos) {
            const auto c1 = spec.find(':');
            const auto c2 = spec.find(':', c1 + 1);
            if (c2 == std::string::npos)
                throw std::invalid_argument("order ladder: expected a:b:step");
            const double a = std::stod(spec.substr(0, c1));
            const double b = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
            const double step = std::stod(spec.substr(c2 + 1));
            if (!(step > 0.0) || b < a)
                throw std::invalid_argument("order ladder: need a <= b and step > 0");
            for (long i = 0;; ++i) {
                const double v = a + i * step;
                if (v > b + 1e-12) break;
                out.push_back(v);
            }
            // land exactly on b when step divides the span
            if (!out.empty() && std::abs(out.back() - b) <= 1e-12) out.back() = b;
        } else {
            std::size_t pos = 0;
            while (pos <= spec.size()) {
                auto comma = spec.find(',', pos);
                if (comma == std::string::npos) comma = spec.size();
                out.push_back(std::stod(spec.substr(pos, comma - pos)));
                pos = comma + 1;
                if (comma == spec.size()) break;
            }
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("order ladder: could not parse '" + spec + "'");
    }
    if (out.empty()) throw std::invalid_argument("order ladder: empty");
    return out;
}

Dataset load_dataset(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error(dir + ": not a directory");
    std::map<std::string, std::pair<std::string, std::string>> stems;  // name -> (clean, noisy)
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string fname = entry.path().filename().string();
        for (const char* ext : {".pgm", ".csv"}) {
            const std::string clean_sfx = std::string(".clean") + ext;
            const std::string noisy_sfx = std::string(".noisy") + ext;
            if (fname.size() > clean_sfx.size() &&
                fname.compare(fname.size() - clean_sfx.size(), clean_sfx.size(), clean_sfx) == 0)
                stems[fname.substr(0, fname.size() - clean_sfx.size())].first =
                    entry.path().string();
            if (fname.size() > noisy_sfx.size() &&
                fname.compare(fname.size() - noisy_sfx.size(), noisy_sfx.size(), noisy_sfx) == 0)
                stems[fname.substr(0, fname.size() - noisy_sfx.size())].second =
                    entry.path().string();
        }
    }
    Dataset ds;
    for (const auto& [name, paths] : stems) {
        if (paths.first.empty() || paths.second.empty())
            throw std::runtime_error(dir + ": pair '" + name + "' is missing its " +
                                     (paths.first.empty() ? "clean" : "noisy") + " file");
        Dataset::Pair pair;
        pair.name = name;
        pair.clean = read_field_any(paths.first);
        pair.noisy = read_field_any(paths.second);
        if (!(pair.clean.grid == pair.noisy.grid))
            throw std::runtime_error(dir + ": pair '" + name + "' has mismatched shapes");
        ds.pairs.push_back(std::move(pair));
    }
    if (ds.pairs.empty()) throw std::runtime_error(dir + ": no dataset pairs found");
    return ds;
}

}  // namespace fractv
