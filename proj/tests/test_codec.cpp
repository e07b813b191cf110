#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

#include "lcdct/codec.hpp"
#include "lcdct/fastalg.hpp"
#include "lcdct/reference.hpp"

using namespace lcdct;
using Catch::Approx;

namespace {

// deterministic 64-bit LCG test images, reproducible across languages
GrayImage lcg_image(std::size_t w, std::size_t h, std::uint64_t seed) {
    GrayImage img(w, h);
    std::uint64_t s = seed;
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            img.at(i, j) = static_cast<std::uint8_t>((s >> 33) & 0xFF);
        }
    return img;
}

GrayImage smooth_image(std::size_t w, std::size_t h) {
    GrayImage img(w, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            const double v = 128.0 + 90.0 * std::sin(0.07 * static_cast<double>(i)) *
                                          std::cos(0.05 * static_cast<double>(j));
            img.at(i, j) = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
        }
    return img;
}

}  // namespace

TEST_CASE("pgm round trip") {
    const GrayImage img = lcg_image(32, 20, 77);
    std::stringstream ss;
    write_pgm(ss, img);
    const GrayImage back = read_pgm(ss);
    CHECK(back == img);

    std::stringstream bad("P2\n2 2\n255\n0 0 0 0\n");
    CHECK_THROWS_AS(read_pgm(bad), std::runtime_error);
    std::stringstream trunc("P5\n4 4\n255\nab");
    CHECK_THROWS_AS(read_pgm(trunc), std::runtime_error);
    std::stringstream comment("P5\n# a comment\n1 1\n255\nx");
    CHECK(read_pgm(comment).at(0, 0) == 'x');
}

TEST_CASE("zigzag order") {
    const auto o4 = zigzag_order(4);
    const std::size_t want[16] = {0, 1, 4, 8, 5, 2, 3, 6, 9, 12, 13, 10, 7, 11, 14, 15};
    REQUIRE(o4.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) CHECK(o4[i] == want[i]);
}

TEST_CASE("zigzag retention") {
    RealMatrix b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) b(i, j) = 1.0 + static_cast<double>(i * 4 + j);

    RealMatrix full = b;
    zigzag_retain(full, 16);
    CHECK(max_abs_diff(full, b) == 0.0);

    RealMatrix none = b;
    zigzag_retain(none, 0);
    CHECK(frobenius_norm_sq(none) == 0.0);

    RealMatrix three = b;
    zigzag_retain(three, 3);
    CHECK(three(0, 0) != 0.0);
    CHECK(three(0, 1) != 0.0);
    CHECK(three(1, 0) != 0.0);
    CHECK(three(1, 1) == 0.0);
    CHECK(three(0, 2) == 0.0);

    CHECK_THROWS_AS(zigzag_retain(b, 17), std::invalid_argument);
}

TEST_CASE("block transform round trip, orthogonal and general") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> pix(0.0, 255.0);
    std::vector<RealMatrix> transforms{exact_dct(8), sdct(8).c_hat, sdct(16).c_hat};
    for (const std::string& name : catalog_names())
        transforms.push_back(orthogonalize(compose(catalog(name))).c_hat);
    for (const RealMatrix& c : transforms) {
        const BlockTransform bt(c);
        RealMatrix a(bt.n(), bt.n());
        for (std::size_t i = 0; i < bt.n(); ++i)
            for (std::size_t j = 0; j < bt.n(); ++j) a(i, j) = pix(rng);
        const RealMatrix back = bt.backward(bt.forward(a));
        CHECK(max_abs_diff(back, a) < 1e-9);
    }
    // orthogonal inverse short-cuts to the transpose
    const BlockTransform ortho(exact_dct(8));
    CHECK(max_abs_diff(ortho.inverse_matrix(), ortho.matrix().transpose()) < 1e-10);
}

TEST_CASE("constant block concentrates in the DC coefficient") {
    const BlockTransform bt(exact_dct(8));
    RealMatrix a(8, 8, 42.0);
    const RealMatrix b = bt.forward(a);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (i + j > 0) CHECK(std::abs(b(i, j)) < 1e-9);
    CHECK(b(0, 0) == Approx(42.0 * 8.0));
}

TEST_CASE("full retention is lossless after rounding") {
    const GrayImage img = lcg_image(64, 64, 20240518);
    for (const char* name : {"T16.5", "T32.2"}) {
        const RealMatrix c = orthogonalize(compose(catalog(name))).c_hat;
        const std::size_t n = c.rows();
        const GrayImage out = compress_image(img, CompressionConfig{n, n * n, c}, 2);
        CHECK(out == img);
    }
    const GrayImage dci = compress_image(img, CompressionConfig{16, 256, exact_dct(16)}, 2);
    CHECK(dci == img);
}

TEST_CASE("image MSE is non-increasing in the retention count") {
    const GrayImage img = smooth_image(64, 64);
    const RealMatrix c = exact_dct(16);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t r : {0, 8, 32, 64, 128, 200, 256}) {
        const GrayImage out = compress_image(img, CompressionConfig{16, r, c}, 2);
        const double m = mse_image(img, out);
        CHECK(m <= prev + 1e-12);
        prev = m;
    }
}

TEST_CASE("compress rejects images not divisible into blocks") {
    const GrayImage img = lcg_image(40, 40, 3);
    CHECK_THROWS_AS(compress_image(img, CompressionConfig{16, 50, exact_dct(16)}),
                    std::invalid_argument);
    const GrayImage ok = lcg_image(32, 32, 3);
    CHECK_THROWS_AS(compress_image(ok, CompressionConfig{16, 257, exact_dct(16)}),
                    std::invalid_argument);
}

TEST_CASE("compression is worker-count invariant") {
    const GrayImage img = lcg_image(64, 64, 9);
    const CompressionConfig cfg{16, 50, exact_dct(16)};
    CHECK(compress_image(img, cfg, 1) == compress_image(img, cfg, 5));
}

TEST_CASE("pixel error measures") {
    const GrayImage a = lcg_image(32, 32, 1);
    CHECK(mse_image(a, a) == 0.0);
    CHECK(std::isinf(psnr(a, a)));

    GrayImage b = a;
    for (auto& p : b.pixels) p = static_cast<std::uint8_t>(std::min(254, p + 1));
    bool saturated = false;
    for (auto p : a.pixels) saturated |= p >= 254;
    if (!saturated) {
        CHECK(mse_image(a, b) == Approx(1.0));
        CHECK(psnr(a, b) == Approx(48.1308).margin(1e-3));
    }

    const GrayImage c = lcg_image(16, 32, 2);
    CHECK_THROWS_AS(mse_image(a, c), std::invalid_argument);

    // psnr/mse consistency on arbitrary pairs
    const GrayImage d = lcg_image(32, 32, 3);
    const double m = mse_image(a, d);
    CHECK(psnr(a, d) == Approx(10.0 * std::log10(255.0 * 255.0 / m)).margin(1e-10));
}

TEST_CASE("mssim against frozen cross-language oracle values") {
    const GrayImage a = lcg_image(64, 48, 12345);
    const GrayImage b = lcg_image(64, 48, 999);
    GrayImage bright = a;
    for (auto& p : bright.pixels)
        p = static_cast<std::uint8_t>(std::min(255.0, p + 10.0));
    GrayImage inverted = a;
    for (auto& p : inverted.pixels) p = static_cast<std::uint8_t>(255 - p);

    CHECK(mssim(a, a) == Approx(1.0).margin(1e-12));
    CHECK(mssim(a, b) == Approx(0.026916582117).margin(1e-9));
    CHECK(mssim(a, bright) == Approx(0.997052753671).margin(1e-9));
    CHECK(mssim(a, inverted) == Approx(-0.968643595531).margin(1e-9));
    CHECK(mssim(a, inverted) < 0.2);

    const GrayImage tiny = lcg_image(8, 8, 4);
    CHECK_THROWS_AS(mssim(tiny, tiny), std::invalid_argument);
}

TEST_CASE("compression rate") {
    CHECK(compression_rate(50, 16) == Approx(0.8047).margin(1e-4));
    CHECK(compression_rate(256, 16) == 0.0);
    CHECK(compression_rate(0, 16) == 1.0);
    CHECK_THROWS_AS(compression_rate(257, 16), std::invalid_argument);
}

TEST_CASE("absolute percentage error") {
    CHECK(ape(5.0, 5.0) == 0.0);
    CHECK(ape(100.0, 90.0) == Approx(0.1));
    CHECK(ape(9.4555, 9.1268) == Approx(0.0347628).margin(1e-6));
    CHECK_THROWS_AS(ape(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("single-image benchmark with full retention gives an all-zero APE row") {
    const GrayImage img = lcg_image(32, 32, 6);
    const std::vector<NamedTransform> ts{{"dct", exact_dct(16)},
                                         {"T16.5", orthogonalize(compose(catalog("T16.5"))).c_hat}};
    const auto rows = benchmark_corpus({img}, ts, 16, {256}, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mse == 0.0);
    const auto ape_rows = ape_csv(rows);
    REQUIRE(ape_rows.size() == 2);  // header + one transform
    CHECK(ape_rows[1].find("T16.5,16,256,0,") != std::string::npos);

    CHECK_THROWS_AS(benchmark_corpus({}, ts, 16, {256}), std::invalid_argument);
}

TEST_CASE("full 512x512 pipeline against an independent cross-language oracle") {
    // smooth field plus LCG noise; the checksum pins the image construction
    GrayImage img(512, 512);
    std::uint64_t s = 777;
    std::uint64_t checksum = 0;
    for (std::size_t i = 0; i < 512; ++i)
        for (std::size_t j = 0; j < 512; ++j) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            const double noise = static_cast<double>((s >> 33) & 0x3F);
            const double v = 96.0 + 80.0 * std::sin(0.043 * static_cast<double>(i)) *
                                         std::cos(0.031 * static_cast<double>(j)) +
                             noise;
            img.at(i, j) = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
            checksum += img.at(i, j);
        }
    REQUIRE(checksum == 33406374ULL);

    const GrayImage rec = compress_image(img, CompressionConfig{16, 50, exact_dct(16)}, 2);
    const QualityReport q = assess_images(img, rec);
    CHECK(q.mse_img == Approx(274.3210029602).margin(0.01));
    CHECK(q.psnr_db == Approx(23.7482130091).margin(0.001));
    CHECK(q.mssim == Approx(0.4018138959).margin(1e-4));
}

TEST_CASE("published quality reference: proposed transforms have the best APE per blocklength") {
    for (std::size_t n : {16, 32, 64}) {
        const ReferenceImageQuality* exact = nullptr;
        for (const auto& row : reference_peppers_quality())
            if (row.n == n && std::string(row.label).rfind("C", 0) == 0 &&
                std::string(row.label).find('.') == std::string::npos)
                exact = &row;
        REQUIRE(exact != nullptr);
        // best proposed transform beats every literature competitor on MSE APE
        double best_prop = 1e9, best_comp = 1e9;
        for (const auto& row : reference_peppers_quality()) {
            if (row.n != n || &row == exact) continue;
            const double e = ape(exact->mse, row.mse);
            if (row.proposed) best_prop = std::min(best_prop, e);
            else best_comp = std::min(best_comp, e);
        }
        CHECK(best_prop <= best_comp);
    }
}

TEST_CASE("svg chart writer emits polylines") {
    std::ostringstream os;
    write_svg_chart(os, {{"a", {{0, 0}, {1, 1}}}, {"b", {{0, 1}, {1, 0}}}}, "demo");
    const std::string svg = os.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("demo") != std::string::npos);
}
