#include "ffdyn/residue.hpp"

#include "ffdyn/error.hpp"

namespace ffdyn {

ResidueRing::ResidueRing(FqPoly modulus) : N_(std::move(modulus)) {
  if (N_.degree() < 1) fail(ErrorKind::InvalidDegree, "residue ring modulus must be nonconstant");
  N_ = N_.monic();
}

}  // namespace ffdyn
