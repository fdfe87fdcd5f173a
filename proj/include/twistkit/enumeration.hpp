#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twistkit/presentation.hpp"
#include "twistkit/word.hpp"

namespace twistkit {

struct InvalidSubgroupSpecError : Error {
  explicit InvalidSubgroupSpecError(const std::string& msg) : Error(msg) {}
};

struct IncompleteTableError : Error {
  explicit IncompleteTableError(const std::string& msg) : Error(msg) {}
};

// Either explicit generator words or a parity map whose kernel is the
// subgroup; the parity form forces the transversal {1, y} for the first
// odd generator y.
class SubgroupSpec {
 public:
  static SubgroupSpec generated_by(std::vector<Word> generators);
  static SubgroupSpec parity_kernel(std::vector<std::string> odd_generators);

  bool is_parity() const { return parity_; }
  const std::vector<Word>& generators() const { return generators_; }
  const std::vector<std::string>& odd_generators() const { return odd_; }

 private:
  bool parity_ = false;
  std::vector<Word> generators_;
  std::vector<std::string> odd_;
};

class CosetTable {
 public:
  enum class Status { Complete, Inconclusive };

  Status status() const { return status_; }
  bool complete() const { return status_ == Status::Complete; }
  int index() const { return static_cast<int>(rows_.size()); }
  int64_t total_defined() const { return total_defined_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  // Cosets are 1-based; coset 1 carries the empty transversal word.
  int act(int coset, int32_t letter) const;
  int act_word(int coset, const Word& w) const;
  const Word& transversal(int coset) const { return transversal_.at(coset - 1); }
  void set_transversal(int coset, const Word& w);

  // Every relator traced from every coset must return to its start.
  bool consistent_with(const Presentation& p) const;

 private:
  friend CosetTable todd_coxeter(const Presentation&, const SubgroupSpec&, int64_t);
  Status status_ = Status::Inconclusive;
  AlphabetPtr alphabet_;
  std::vector<std::vector<int32_t>> rows_;  // [coset][slot], slot = 2*gen + (inv?1:0)
  std::vector<Word> transversal_;
  int64_t total_defined_ = 0;
};

// HLT-style enumeration with row filling. Exceeding max_cosets yields an
// Inconclusive table, not an error.
CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& subgroup,
                        int64_t max_cosets = 1'000'000);

struct SchreierGenerator {
  int coset = 0;              // 1-based
  std::string base;           // generator of the parent presentation
  std::string name;           // name in the subgroup presentation
  Word value;                 // t_r * x * mean(t_r x)^-1 over the parent alphabet
};

struct RSResult {
  Presentation presentation;
  std::vector<SchreierGenerator> generators;  // emitted, freely nontrivial
  int index = 0;
  int raw_generator_pairs = 0;  // index * |alphabet|
  int tree_edges = 0;           // index - 1
  int raw_relator_count = 0;    // index * |relators|
};

using RSNaming = std::function<std::string(int coset, const std::string& gen)>;

RSNaming mechanical_naming();
// Coset-1 copies keep their base name; the odd generator squared becomes
// e.g. "y2"; other coset-2 copies get a "_y" style suffix.
RSNaming parity_naming(const std::string& odd_generator);

RSResult reidemeister_schreier(const Presentation& p, const CosetTable& table,
                               const RSNaming& naming = mechanical_naming());

}  // namespace twistkit
