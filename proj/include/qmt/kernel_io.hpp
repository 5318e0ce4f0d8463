#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qmt/transform.hpp"

namespace qmt {

/// Provenance line of a generated codebook: "# builder <name> <m> <n> <a> <b>".
/// Also fixes the grid shapes (m,n) and (a,b) of the kernel's index sets.
struct BuilderTag {
    std::string name;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t code_rows = 0;
    std::size_t code_cols = 0;

    friend bool operator==(const BuilderTag&, const BuilderTag&) = default;
};

struct KernelFile {
    Kernel kernel;
    std::optional<BuilderTag> builder;
};

// QKERNEL text format:
//
//   QKERNEL 1
//   # builder <name> <m> <n> <a> <b>      (optional)
//   <family> <|X|> <|Y|>
//   |X| lines of |Y| values, row-major in x
//
// Lines starting with '#' are comments; only the builder comment is
// interpreted. Values are written in shortest round-trip form.

std::string format_kernel(const Kernel& p, const std::optional<BuilderTag>& builder = std::nullopt);
/// Throws ParseError (with byte offset) on malformed input, DomainError on values
/// outside the declared family's carrier.
KernelFile parse_kernel(std::string_view text);

void write_kernel_file(const std::filesystem::path& path, const Kernel& p,
                       const std::optional<BuilderTag>& builder = std::nullopt);
/// Throws IoError when the file cannot be read.
KernelFile read_kernel_file(const std::filesystem::path& path);

/// Reads a whole file into memory. Throws IoError.
std::string slurp(const std::filesystem::path& path);
/// Writes bytes, replacing the file. Throws IoError.
void spill(const std::filesystem::path& path, std::string_view bytes);

}  // namespace qmt
