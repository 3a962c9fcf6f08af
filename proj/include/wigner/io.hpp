#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wigner/core.hpp"

namespace wigner {

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV layout: '#'-prefixed metadata lines, then the header `x,p,value`,
/// then one row per grid point in x-major order.  Values are printed
/// with 17 significant digits, so a round trip reproduces every double
/// bit-for-bit.  Grid geometry is always embedded in the metadata.
void write_field_csv(const WignerField& field, const std::filesystem::path& path,
                     const Metadata& metadata = {});

/// Rebuilds a field from a CSV produced by write_field_csv.
WignerField read_field_csv(const std::filesystem::path& path);

/// Sign-split binary PGM (P5, maxval 255) pair.  In each image, pixel
/// 255 maps the maximum |value| of that sign; an all-zero part yields an
/// all-zero image.  Rows run from p_max down to p_min, columns from
/// x_min to x_max.
void write_pgm_pair(const WignerField& field, const std::filesystem::path& positive_path,
                    const std::filesystem::path& negative_path, const Metadata& metadata = {});

}  // namespace wigner
