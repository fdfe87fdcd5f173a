#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistkit/presentation.hpp"
#include "twistkit/word.hpp"

namespace twistkit {

struct OneSidedClassError : Error {
  explicit OneSidedClassError(const std::string& msg) : Error(msg) {}
};

struct MissingAssignmentError : Error {
  explicit MissingAssignmentError(const std::string& msg) : Error(msg) {}
};

// Standard model of N_{g,n}: crosscap classes mu1..mug and boundary classes
// d1..d(n-1) span H_1 over Z/2. The intersection form is the identity on the
// mu block and zero on the boundary block.
class SurfaceModel {
 public:
  SurfaceModel(int genus, int boundary);
  int genus() const { return genus_; }
  int boundary() const { return boundary_; }
  int rank() const { return genus_ + (boundary_ > 0 ? boundary_ - 1 : 0); }
  uint32_t mu_mask() const { return (1u << genus_) - 1; }
  std::string basis_name(int index) const;

 private:
  int genus_;
  int boundary_;
};

class Mod2Class {
 public:
  Mod2Class() = default;
  Mod2Class(uint32_t bits, int rank) : bits_(bits), rank_(rank) {}
  static Mod2Class zero(int rank) { return Mod2Class(0, rank); }

  uint32_t bits() const { return bits_; }
  int rank() const { return rank_; }
  bool is_zero() const { return bits_ == 0; }
  bool bit(int i) const { return (bits_ >> i) & 1u; }

  Mod2Class operator+(const Mod2Class& o) const { return Mod2Class(bits_ ^ o.bits_, rank_); }
  bool operator==(const Mod2Class& o) const { return bits_ == o.bits_ && rank_ == o.rank_; }
  bool operator!=(const Mod2Class& o) const { return !(*this == o); }
  bool operator<(const Mod2Class& o) const { return bits_ < o.bits_; }

 private:
  uint32_t bits_ = 0;
  int rank_ = 0;
};

int pairing(const SurfaceModel& m, const Mod2Class& a, const Mod2Class& b);

// Accepts mu1/m1/u1 and d1 syllables joined by '+', or "0".
Mod2Class parse_class(std::string_view text, const SurfaceModel& m);
std::string format_class(const Mod2Class& c, const SurfaceModel& m);

class Mod2Matrix {
 public:
  Mod2Matrix() = default;
  static Mod2Matrix identity(int rank);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_identity() const;
  uint32_t row(int i) const { return rows_.at(i); }

  Mod2Class apply(const Mod2Class& x) const;
  Mod2Matrix operator*(const Mod2Matrix& o) const;
  Mod2Matrix inverse() const;
  bool operator==(const Mod2Matrix& o) const { return rows_ == o.rows_; }
  bool operator!=(const Mod2Matrix& o) const { return rows_ != o.rows_; }

  static Mod2Matrix from_rows(std::vector<uint32_t> rows);

 private:
  std::vector<uint32_t> rows_;
};

// x -> x + <x,c> c. Requires a two-sided class: pairing(c,c) = 0.
Mod2Matrix transvection(const SurfaceModel& m, const Mod2Class& c);

using MatrixAssignment = std::map<std::string, Mod2Matrix>;

Mod2Matrix evaluate(const Word& w, const MatrixAssignment& assign);

struct RelatorVerdict {
  std::string label;
  bool pass;
};

std::vector<RelatorVerdict> verify_relators(const Presentation& p, const SurfaceModel& m,
                                            const MatrixAssignment& assign);

struct PairingConstraint {
  std::string a;
  std::string b;
  int parity = 0;
  std::string origin;  // relator label or seed note
};

struct SolveResult {
  bool satisfiable = false;
  std::map<std::string, Mod2Class> assignment;
  std::vector<PairingConstraint> violated;      // a minimal unsatisfiable core
  std::map<std::string, int> solution_counts;   // per unknown, others frozen
};

// Exhaustive search over (Z/2)^rank vectors per unknown, constraints checked
// as soon as both endpoints are determined.
SolveResult class_solver(const SurfaceModel& m,
                         const std::map<std::string, Mod2Class>& seeds,
                         const std::vector<std::string>& unknowns,
                         const std::vector<PairingConstraint>& constraints);

// Commutation and braid shaped relators yield pairing 0 / 1 between the two
// twisted curves; other relators contribute nothing.
std::vector<PairingConstraint> extract_pairing_constraints(const Presentation& p);

}  // namespace twistkit
