#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "l1tv/grid.hpp"
#include "l1tv/perimeter.hpp"
#include "l1tv/report.hpp"
#include "l1tv/solver.hpp"

namespace l1tv {

enum class ImageFormat { pgm, pbm };

/* Reads binary PGM (P5, maxval <= 255) or PBM (P4), picking the format
 * from the magic number. PGM pixels >= (maxval + 1) / 2 are foreground;
 * PBM 1-bits are foreground. */
BinaryMask read_mask(const std::filesystem::path& path, Rational spacing = {1, 1});
BinaryMask decode_mask(const std::string& bytes, Rational spacing = {1, 1});

// PGM writes 255 for foreground and 0 for background.
std::string encode_mask(const BinaryMask& mask, ImageFormat format);
void write_mask(const std::filesystem::path& path, const BinaryMask& mask, ImageFormat format);
// Format from the extension: .pbm -> PBM, anything else PGM.
ImageFormat format_for_path(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
void write_json(const std::filesystem::path& path, const Json& json);

struct SweepEntry {
    Rational lambda;
    SolveResult result;
};
struct SweepResult {
    std::vector<SweepEntry> entries;  // in the order of the input list
    // contains[i][j]: sigma_i is a subset of sigma_j; observed, never asserted
    std::vector<std::vector<bool>> contains;
};

// lambdas must be positive and strictly increasing.
SweepResult sweep_lambda(const BinaryMask& omega, const std::vector<Rational>& lambdas, const Stencil& stencil,
                         const SolveOptions& options = {});
Json to_json(const SweepResult& sweep);

}  // namespace l1tv
