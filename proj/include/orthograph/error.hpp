#pragma once

#include <stdexcept>
#include <string>

namespace orthograph {

enum class Errc {
  DegreeExceeded,
  NonPlanarEmbedding,
  DanglingRotationEntry,
  DisconnectedInput,
  DegreeOneVertex,
  NotSeriesParallel,
  Infeasible,
  UncanonicalFlow,
  InvalidRep,
  InconsistentConstraints,
  InfeasiblePair,
  NotATree,
  Lemma4Violation,
  NotHamiltonian,
  EmbeddingConflict,
  TooLarge,
  OverlappingInk,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace orthograph
