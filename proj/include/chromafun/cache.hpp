#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chromafun/chromatic.hpp"
#include "chromafun/polynomial.hpp"

namespace chromafun {

inline constexpr const char* kCacheHeader = "chromafun-cache v1";

/// Append-only log of (graph6, coefficient list) entries with a version
/// header.  A version mismatch invalidates the whole file; a corrupt tail is
/// truncated on load and overwritten by the next append.
class PolynomialCache {
 public:
  explicit PolynomialCache(std::string path) : path_(std::move(path)) { load(); }

  const std::map<std::string, IntPolynomial>& entries() const { return entries_; }

  void seed_solver(ChromaticSolver& solver) const {
    for (const auto& [key, poly] : entries_) solver.seed_cache(key, poly);
  }

  /// Appends solver cache entries that are not yet on disk, in sorted key
  /// order.  Rewrites the file only when the stored version was invalid.
  void absorb(const ChromaticSolver& solver) {
    std::map<std::string, IntPolynomial> fresh;
    for (const auto& [key, poly] : solver.cache()) {
      if (!entries_.count(key)) fresh.emplace(key, poly);
    }
    if (fresh.empty() && valid_) return;
    std::ofstream out;
    if (valid_) {
      out.open(path_, std::ios::app);
    } else {
      out.open(path_, std::ios::trunc);
      out << kCacheHeader << "\n";
      for (const auto& [key, poly] : entries_) out << format_entry(key, poly);
    }
    for (const auto& [key, poly] : fresh) {
      out << format_entry(key, poly);
      entries_.emplace(key, poly);
    }
    valid_ = true;
  }

 private:
  static std::string format_entry(const std::string& key, const IntPolynomial& poly) {
    std::ostringstream line;
    line << key << "\t";
    const auto& coeffs = poly.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) line << ",";
      line << coeffs[i].str();
    }
    line << "\n";
    return line.str();
  }

  void load() {
    std::ifstream in(path_);
    if (!in) {
      valid_ = false;  // missing file; created on first absorb
      return;
    }
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader) {
      valid_ = false;  // wrong version: drop everything
      return;
    }
    valid_ = true;
    while (std::getline(in, line)) {
      auto tab = line.find('\t');
      if (tab == std::string::npos) {
        valid_ = false;  // corrupt tail; truncated on next absorb
        return;
      }
      std::string key = line.substr(0, tab);
      std::vector<BigInt> coeffs;
      std::string field;
      std::istringstream rest(line.substr(tab + 1));
      bool ok = true;
      while (std::getline(rest, field, ',')) {
        try {
          coeffs.emplace_back(field);
        } catch (...) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        valid_ = false;
        return;
      }
      entries_[key] = IntPolynomial::from_coefficients(std::move(coeffs));
    }
  }

  std::string path_;
  std::map<std::string, IntPolynomial> entries_;
  bool valid_ = false;
};

}  // namespace chromafun
