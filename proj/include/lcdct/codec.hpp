#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcdct/matrix.hpp"
#include "lcdct/metrics.hpp"

namespace lcdct {

/// 8-bit grayscale raster.
struct GrayImage {
    std::size_t width = 0, height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(std::size_t w, std::size_t h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(w * h, fill) {}

    std::uint8_t& at(std::size_t y, std::size_t x) { return pixels[y * width + x]; }
    std::uint8_t at(std::size_t y, std::size_t x) const { return pixels[y * width + x]; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

// ---- PGM (P5, maxval <= 255) -----------------------------------------------

inline GrayImage read_pgm(std::istream& is) {
    auto next_token = [&is]() {
        std::string tok;
        for (;;) {
            if (!(is >> tok)) throw std::runtime_error("pgm: truncated header");
            if (tok[0] == '#') {
                std::string rest;
                std::getline(is, rest);
                continue;
            }
            return tok;
        }
    };
    if (next_token() != "P5") throw std::runtime_error("pgm: not a binary P5 file");
    const std::size_t w = std::stoul(next_token());
    const std::size_t h = std::stoul(next_token());
    const unsigned maxval = static_cast<unsigned>(std::stoul(next_token()));
    if (maxval == 0 || maxval > 255)
        throw std::runtime_error("pgm: only 8-bit images are supported");
    is.get();  // single whitespace after maxval
    GrayImage img(w, h);
    is.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<std::size_t>(is.gcount()) != img.pixels.size())
        throw std::runtime_error("pgm: truncated pixel data");
    return img;
}

inline void write_pgm(std::ostream& os, const GrayImage& img) {
    os << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.pixels.data()),
             static_cast<std::streamsize>(img.pixels.size()));
}

inline GrayImage load_pgm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_pgm: cannot open " + path);
    return read_pgm(f);
}

inline void save_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save_pgm: cannot open " + path);
    write_pgm(f, img);
}

// ---- block transform pipeline ----------------------------------------------

struct CompressionConfig {
    std::size_t n = 16;        // block size
    std::size_t retained = 0;  // r, zig-zag coefficients kept per block
    RealMatrix transform;      // C_hat (or the exact DCT)
};

/// Diagonal zig-zag scan order for an NxN block: starts at (0,0), first step
/// to (0,1), then alternating anti-diagonal sweeps. Returns row-major flat
/// indices in scan order.
inline std::vector<std::size_t> zigzag_order(std::size_t n) {
    std::vector<std::size_t> order;
    order.reserve(n * n);
    for (std::size_t d = 0; d + 1 <= 2 * n - 1; ++d) {
        const std::size_t lo = d >= n ? d - n + 1 : 0;
        const std::size_t hi = std::min(d, n - 1);
        if (d % 2 == 1) {
            for (std::size_t i = lo; i <= hi; ++i) order.push_back(i * n + (d - i));
        } else {
            for (std::size_t i = hi + 1; i-- > lo;) order.push_back(i * n + (d - i));
        }
    }
    return order;
}

/// Zero every coefficient at zig-zag position >= r.
inline void zigzag_retain(RealMatrix& block, std::size_t r) {
    const std::size_t n = block.rows();
    if (r > n * n) throw std::invalid_argument("zigzag_retain: r out of range");
    const std::vector<std::size_t> order = zigzag_order(n);
    for (std::size_t k = r; k < order.size(); ++k)
        block(order[k] / n, order[k] % n) = 0.0;
}

/// Precomputed forward/inverse pair for the 2-D block transform
/// B = C A C^-1, A = C^-1 B C. Orthogonal transforms short-cut the inverse
/// to the transpose.
class BlockTransform {
public:
    explicit BlockTransform(const RealMatrix& c_hat) : c_(c_hat) {
        if (c_.rows() != c_.cols())
            throw std::invalid_argument("BlockTransform: matrix must be square");
        const RealMatrix gram = c_ * c_.transpose();
        if (max_abs_diff(gram, RealMatrix::identity(c_.rows())) < 1e-10)
            cinv_ = c_.transpose();
        else
            cinv_ = inverse(c_);
    }

    std::size_t n() const { return c_.rows(); }
    const RealMatrix& matrix() const { return c_; }
    const RealMatrix& inverse_matrix() const { return cinv_; }

    RealMatrix forward(const RealMatrix& a) const { return c_ * a * cinv_; }
    RealMatrix backward(const RealMatrix& b) const { return cinv_ * b * c_; }

private:
    RealMatrix c_, cinv_;
};

/// Per-block forward transform, zig-zag retention, inverse transform; the
/// whole pipeline runs in doubles, with clamping to [0,255] and rounding to
/// 8 bits only at the end. Blocks are independent and processed in parallel.
inline GrayImage compress_image(const GrayImage& img, const CompressionConfig& cfg,
                                unsigned workers = 0) {
    const std::size_t n = cfg.n;
    if (img.width % n != 0 || img.height % n != 0)
        throw std::invalid_argument("compress_image: image dimensions must be multiples of N");
    if (cfg.retained > n * n) throw std::invalid_argument("compress_image: r out of range");
    const BlockTransform bt(cfg.transform);
    GrayImage out(img.width, img.height);
    const std::size_t by = img.height / n, bx = img.width / n;

    auto process_rows = [&](std::size_t r0, std::size_t r1) {
        RealMatrix a(n, n);
        for (std::size_t br = r0; br < r1; ++br)
            for (std::size_t bc = 0; bc < bx; ++bc) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        a(i, j) = static_cast<double>(img.at(br * n + i, bc * n + j));
                RealMatrix b = bt.forward(a);
                zigzag_retain(b, cfg.retained);
                const RealMatrix rec = bt.backward(b);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const double v = std::min(255.0, std::max(0.0, rec(i, j)));
                        out.at(br * n + i, bc * n + j) =
                            static_cast<std::uint8_t>(std::lround(v));
                    }
            }
    };

    unsigned w = workers ? workers : std::thread::hardware_concurrency();
    w = std::max(1u, std::min<unsigned>(w, static_cast<unsigned>(by)));
    if (w <= 1) {
        process_rows(0, by);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (by + w - 1) / w;
        for (unsigned t = 0; t < w; ++t) {
            const std::size_t r0 = t * chunk, r1 = std::min(by, r0 + chunk);
            if (r0 < r1) pool.emplace_back(process_rows, r0, r1);
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

// ---- image quality measures --------------------------------------------------

inline double mse_image(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("mse_image: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        s += d * d;
    }
    return s / static_cast<double>(a.pixels.size());
}

/// 10 log10(255^2 / mse); identical images report infinity.
inline double psnr(const GrayImage& a, const GrayImage& b) {
    const double m = mse_image(a, b);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

/// Mean structural similarity over the valid (fully windowed) map:
/// 11x11 Gaussian window with sigma 1.5, K1 = 0.01, K2 = 0.03, L = 255.
inline double mssim(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("mssim: dimension mismatch");
    constexpr std::size_t kWin = 11;
    if (a.width < kWin || a.height < kWin)
        throw std::invalid_argument("mssim: image smaller than the 11x11 window");

    double kernel[kWin];
    {
        double sum = 0.0;
        for (std::size_t i = 0; i < kWin; ++i) {
            const double d = static_cast<double>(i) - 5.0;
            kernel[i] = std::exp(-0.5 * d * d / (1.5 * 1.5));
            sum += kernel[i];
        }
        for (double& k : kernel) k /= sum;  // separable; outer product sums to 1
    }

    const std::size_t w = a.width, h = a.height;
    const std::size_t vw = w - kWin + 1, vh = h - kWin + 1;
    // five windowed moment fields: a, b, a^2, b^2, ab
    std::vector<std::vector<double>> fields(5, std::vector<double>(w * h));
    for (std::size_t i = 0; i < w * h; ++i) {
        const double x = a.pixels[i], y = b.pixels[i];
        fields[0][i] = x;
        fields[1][i] = y;
        fields[2][i] = x * x;
        fields[3][i] = y * y;
        fields[4][i] = x * y;
    }
    std::vector<std::vector<double>> taps(5, std::vector<double>(vw * h));
    for (std::size_t f = 0; f < 5; ++f) {
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < vw; ++x) {
                double s = 0.0;
                for (std::size_t k = 0; k < kWin; ++k) s += kernel[k] * fields[f][y * w + x + k];
                taps[f][y * vw + x] = s;
            }
        std::vector<double> col(vw * vh);
        for (std::size_t y = 0; y < vh; ++y)
            for (std::size_t x = 0; x < vw; ++x) {
                double s = 0.0;
                for (std::size_t k = 0; k < kWin; ++k) s += kernel[k] * taps[f][(y + k) * vw + x];
                col[y * vw + x] = s;
            }
        taps[f] = std::move(col);
    }

    constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < vw * vh; ++i) {
        const double mu1 = taps[0][i], mu2 = taps[1][i];
        const double s11 = taps[2][i] - mu1 * mu1;
        const double s22 = taps[3][i] - mu2 * mu2;
        const double s12 = taps[4][i] - mu1 * mu2;
        acc += ((2.0 * mu1 * mu2 + kC1) * (2.0 * s12 + kC2)) /
               ((mu1 * mu1 + mu2 * mu2 + kC1) * (s11 + s22 + kC2));
    }
    return acc / static_cast<double>(vw * vh);
}

struct QualityReport {
    double mse_img = 0.0;
    double psnr_db = 0.0;  // infinity for identical images
    double mssim = 0.0;
};

inline QualityReport assess_images(const GrayImage& original, const GrayImage& compressed) {
    return QualityReport{mse_image(original, compressed), psnr(original, compressed),
                         mssim(original, compressed)};
}

/// CR = 1 - r/N^2, the discarded fraction of transform coefficients.
inline double compression_rate(std::size_t r, std::size_t n) {
    if (r > n * n) throw std::invalid_argument("compression_rate: r out of range");
    return 1.0 - static_cast<double>(r) / static_cast<double>(n * n);
}

/// Absolute percentage error of a quality measure relative to the exact DCT.
inline double ape(double mu_exact, double mu_approx) {
    if (mu_exact == 0.0) throw std::invalid_argument("ape: zero reference measure");
    return std::abs(mu_exact - mu_approx) / std::abs(mu_exact);
}

// ---- corpus benchmark ---------------------------------------------------------

struct BenchmarkRow {
    std::string image;      // "corpus-mean" for aggregated rows
    std::string transform;
    std::size_t n = 0;
    std::size_t r = 0;
    double cr = 0.0;
    double mse = 0.0;
    double psnr_db = 0.0;
    double mssim = 0.0;
};

inline const char* benchmark_csv_header() { return "image,transform,N,r,CR,mse,psnr_db,mssim"; }

inline std::string to_csv_row(const BenchmarkRow& r) {
    std::ostringstream os;
    os.precision(10);
    os << r.image << ',' << r.transform << ',' << r.n << ',' << r.r << ',' << r.cr << ','
       << r.mse << ',' << r.psnr_db << ',' << r.mssim;
    return os.str();
}

struct NamedTransform {
    std::string name;
    RealMatrix matrix;
};

/// Compress every corpus image with every transform at every retention level;
/// returns corpus-mean rows per (transform, r), first transform taken as the
/// reference for companion APE rows. Summation over images follows corpus
/// order, so results do not depend on the worker count.
inline std::vector<BenchmarkRow> benchmark_corpus(const std::vector<GrayImage>& images,
                                                  const std::vector<NamedTransform>& transforms,
                                                  std::size_t n,
                                                  const std::vector<std::size_t>& r_values,
                                                  unsigned workers = 0) {
    if (images.empty()) throw std::invalid_argument("benchmark_corpus: empty corpus");
    if (transforms.empty()) throw std::invalid_argument("benchmark_corpus: no transforms");
    std::vector<BenchmarkRow> rows;
    for (const NamedTransform& t : transforms) {
        for (const std::size_t r : r_values) {
            BenchmarkRow row;
            row.image = images.size() == 1 ? "single" : "corpus-mean";
            row.transform = t.name;
            row.n = n;
            row.r = r;
            row.cr = compression_rate(r, n);
            for (const GrayImage& img : images) {
                const GrayImage rec =
                    compress_image(img, CompressionConfig{n, r, t.matrix}, workers);
                const QualityReport q = assess_images(img, rec);
                row.mse += q.mse_img;
                row.psnr_db += q.psnr_db;
                row.mssim += q.mssim;
            }
            const double cnt = static_cast<double>(images.size());
            row.mse /= cnt;
            row.psnr_db /= cnt;
            row.mssim /= cnt;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

/// APE rows of every non-reference transform against the first one, matched
/// by retention level. Identical measures give 0 even when the reference is 0
/// (lossless end of a sweep); an undefined ratio prints as nan.
inline std::vector<std::string> ape_csv(const std::vector<BenchmarkRow>& rows) {
    auto safe_ape = [](double mu_exact, double mu_approx) {
        if (mu_exact == mu_approx) return 0.0;
        if (mu_exact == 0.0) return std::numeric_limits<double>::quiet_NaN();
        return ape(mu_exact, mu_approx);
    };
    std::vector<std::string> out;
    out.push_back("transform,N,r,ape_mse,ape_psnr,ape_mssim");
    if (rows.empty()) return out;
    const std::string& ref = rows.front().transform;
    for (const BenchmarkRow& row : rows) {
        if (row.transform == ref) continue;
        const BenchmarkRow* base = nullptr;
        for (const BenchmarkRow& cand : rows)
            if (cand.transform == ref && cand.r == row.r && cand.n == row.n) {
                base = &cand;
                break;
            }
        if (!base) continue;
        std::ostringstream os;
        os.precision(10);
        os << row.transform << ',' << row.n << ',' << row.r << ','
           << safe_ape(base->mse, row.mse) << ',' << safe_ape(base->psnr_db, row.psnr_db) << ','
           << safe_ape(base->mssim, row.mssim);
        out.push_back(os.str());
    }
    return out;
}

/// Minimal hand-written SVG line chart: one polyline per series.
struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

inline void write_svg_chart(std::ostream& os, const std::vector<ChartSeries>& series,
                            const std::string& title) {
    constexpr double kW = 800, kH = 500, kPad = 60;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (first) { xmin = xmax = x; ymin = ymax = y; first = false; }
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) { return kPad + (x - xmin) / (xmax - xmin) * (kW - 2 * kPad); };
    auto py = [&](double y) { return kH - kPad - (y - ymin) / (ymax - ymin) * (kH - 2 * kPad); };
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << kW / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
       << "</text>\n";
    os << "<line x1='" << kPad << "' y1='" << kH - kPad << "' x2='" << kW - kPad << "' y2='"
       << kH - kPad << "' stroke='black'/>\n";
    os << "<line x1='" << kPad << "' y1='" << kPad << "' x2='" << kPad << "' y2='" << kH - kPad
       << "' stroke='black'/>\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        os << "<polyline fill='none' stroke='" << kColors[s % 8] << "' stroke-width='1.5' points='";
        for (const auto& [x, y] : series[s].points) os << px(x) << ',' << py(y) << ' ';
        os << "'/>\n";
        os << "<text x='" << kW - kPad + 4 << "' y='" << kPad + 16 * static_cast<double>(s)
           << "' font-size='11' fill='" << kColors[s % 8] << "'>" << series[s].label
           << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace lcdct
