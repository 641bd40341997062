#include "l1tv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "l1tv/errors.hpp"

namespace l1tv {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(const std::string& bytes) : b_(bytes) {}

    void skip_space() {
        while (pos_ < b_.size()) {
            if (b_[pos_] == '#') {
                while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(b_[pos_]))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long number(const char* what) {
        skip_space();
        long v = 0;
        std::size_t digits = 0;
        while (pos_ < b_.size() && std::isdigit(static_cast<unsigned char>(b_[pos_]))) {
            v = v * 10 + (b_[pos_++] - '0');
            if (v > (1L << 30)) throw FormatError(std::string("image ") + what + " is too large");
            ++digits;
        }
        if (digits == 0) throw FormatError(std::string("image header: expected ") + what);
        return v;
    }

    // exactly one whitespace byte separates the header from the raster
    std::size_t raster_start() {
        if (pos_ >= b_.size() || !std::isspace(static_cast<unsigned char>(b_[pos_])))
            throw FormatError("image header: missing separator before raster");
        return pos_ + 1;
    }

    std::size_t pos_ = 2;

private:
    const std::string& b_;
};

}  // namespace

BinaryMask decode_mask(const std::string& bytes, Rational spacing) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '4'))
        throw FormatError("unsupported image: expected binary PGM (P5) or PBM (P4)");
    const bool pgm = bytes[1] == '5';
    HeaderReader hr(bytes);
    const long w = hr.number("width");
    const long h = hr.number("height");
    long maxval = 1;
    if (pgm) {
        maxval = hr.number("maxval");
        if (maxval < 1 || maxval > 255) throw FormatError("PGM maxval must be in [1, 255]");
    }
    if (w < 1 || h < 1) throw FormatError("image dimensions must be positive");
    const std::size_t start = hr.raster_start();
    const std::size_t row_bytes = pgm ? static_cast<std::size_t>(w) : (static_cast<std::size_t>(w) + 7) / 8;
    if (bytes.size() - start < row_bytes * static_cast<std::size_t>(h)) throw FormatError("image raster is truncated");

    BinaryMask m(GridGeom(static_cast<int>(w), static_cast<int>(h), spacing));
    const long threshold = (maxval + 1) / 2;
    for (long y = 0; y < h; ++y) {
        const auto* row = reinterpret_cast<const unsigned char*>(bytes.data() + start + y * row_bytes);
        for (long x = 0; x < w; ++x) {
            const bool v = pgm ? row[x] >= threshold : (row[x >> 3] >> (7 - (x & 7))) & 1;
            if (v) m.set(static_cast<int>(x), static_cast<int>(y));
        }
    }
    return m;
}

BinaryMask read_mask(const std::filesystem::path& path, Rational spacing) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open image " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_mask(ss.str(), spacing);
}

std::string encode_mask(const BinaryMask& mask, ImageFormat format) {
    const int w = mask.width(), h = mask.height();
    std::string out = (format == ImageFormat::pgm ? "P5\n" : "P4\n") + std::to_string(w) + " " + std::to_string(h) + "\n";
    if (format == ImageFormat::pgm) {
        out += "255\n";
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) out.push_back(mask.get(x, y) ? static_cast<char>(255) : '\0');
    } else {
        const int row_bytes = (w + 7) / 8;
        for (int y = 0; y < h; ++y) {
            std::string row(static_cast<std::size_t>(row_bytes), '\0');
            for (int x = 0; x < w; ++x)
                if (mask.get(x, y)) row[static_cast<std::size_t>(x >> 3)] |= static_cast<char>(0x80 >> (x & 7));
            out += row;
        }
    }
    return out;
}

ImageFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".pbm" ? ImageFormat::pbm : ImageFormat::pgm;
}

void write_mask(const std::filesystem::path& path, const BinaryMask& mask, ImageFormat format) {
    write_file_atomic(path, encode_mask(mask, format));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw FormatError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw FormatError("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

void write_json(const std::filesystem::path& path, const Json& json) {
    write_file_atomic(path, json.dump(2) + "\n");
}

SweepResult sweep_lambda(const BinaryMask& omega, const std::vector<Rational>& lambdas, const Stencil& stencil,
                         const SolveOptions& options) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!lambdas[i].positive()) throw ConfigError("lambda values must be positive");
        if (i > 0 && !(lambdas[i - 1].to_double() < lambdas[i].to_double()))
            throw ConfigError("lambda values must be strictly increasing");
    }
    SweepResult out;
    out.entries.resize(lambdas.size());
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(lambdas.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < lambdas.size(); i += workers) {
            try {
                out.entries[i] = {lambdas[i], minimize(omega, EnergyParams(lambdas[i]), stencil, options)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    const std::size_t n = out.entries.size();
    out.contains.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.contains[i][j] = out.entries[i].result.sigma.is_subset_of(out.entries[j].result.sigma);
    return out;
}

Json to_json(const SweepResult& sweep) {
    Json rows = Json::array();
    for (const auto& e : sweep.entries) {
        const auto& r = e.result;
        rows.push_back({{"lambda", e.lambda.str()},
                        {"R", r.report.params.critical_radius()},
                        {"area", r.sigma.area()},
                        {"energy", to_json(r.report)}});
    }
    Json obs = Json::array();
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < sweep.entries.size(); ++i) {
        const bool c = sweep.contains[i][i + 1];
        monotone = monotone && c;
        obs.push_back({{"from", sweep.entries[i].lambda.str()}, {"to", sweep.entries[i + 1].lambda.str()}, {"subset", c}});
    }
    return {{"series", rows}, {"consecutive_containment", obs}, {"all_nested", monotone},
            {"note", "containment is observed only"}};
}

}  // namespace l1tv
