#include "orthograph/error.hpp"

namespace orthograph {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DegreeExceeded: return "DegreeExceeded";
    case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case Errc::DanglingRotationEntry: return "DanglingRotationEntry";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::DegreeOneVertex: return "DegreeOneVertex";
    case Errc::NotSeriesParallel: return "NotSeriesParallel";
    case Errc::Infeasible: return "Infeasible";
    case Errc::UncanonicalFlow: return "UncanonicalFlow";
    case Errc::InvalidRep: return "InvalidRep";
    case Errc::InconsistentConstraints: return "InconsistentConstraints";
    case Errc::InfeasiblePair: return "InfeasiblePair";
    case Errc::NotATree: return "NotATree";
    case Errc::Lemma4Violation: return "Lemma4Violation";
    case Errc::NotHamiltonian: return "NotHamiltonian";
    case Errc::EmbeddingConflict: return "EmbeddingConflict";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OverlappingInk: return "OverlappingInk";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

}  // namespace orthograph
