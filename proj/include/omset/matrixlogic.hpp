#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace omset::matrix {

using Mat = Eigen::MatrixXcd;

inline constexpr double kTol = 1e-9;       // identity / invariant tolerance
inline constexpr double kRankTol = 1e-7;   // singular value / eigenvalue cut

// A projection on C^dim (dim <= 8): Hermitian and idempotent within kTol.
// Construction validates both invariants.
class Projection {
 public:
  explicit Projection(Mat m);
  static Projection zero(int dim);
  static Projection identity(int dim);
  static Projection ontoSpan(const Mat& columns);   // orthonormalizes
  static Projection rankOne(const Eigen::VectorXcd& v);

  const Mat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  int rank() const;

  Projection ortho() const;  // I - P

 private:
  Mat m_;
};

double dist(const Projection& a, const Projection& b);

// Meet = projection onto range(P) n range(Q), computed from the null space
// of (I-P)+(I-Q); join = projection onto range(P)+range(Q) from column-space
// orthonormalization. Both are exact for projections up to kRankTol rank
// decisions.
Projection projMeet(const Projection& p, const Projection& q);
Projection projJoin(const Projection& p, const Projection& q);
Projection projOrtho(const Projection& p);
bool projCommutes(const Projection& p, const Projection& q);
bool projLe(const Projection& p, const Projection& q);  // PQ = P

// com(P,Q) via the four projection meets.
Projection projMarsdenCom(const Projection& p, const Projection& q);

// P o_theta Q = e^{i theta P} Q e^{-i theta P}; checked against the
// expansion Q + (e^{it}-1)PQ + (e^{-it}-1)QP + 2(1-cos t)PQP. Throws
// std::runtime_error if the two routes disagree beyond kTol.
Projection circTheta(const Projection& p, const Projection& q, double theta);

// The six polynomials evaluated through the projection operations.
Projection projKotas(int j, const Projection& p, const Projection& q);

// j in 0..5, i in {0,1}:
//   i = 0:  P =>_j (P o_theta Q)
//   i = 1:  (Q o_theta P) =>_j Q
Projection twistedImpl(int j, double theta, int i, const Projection& p,
                       const Projection& q);

struct RelationFailure {
  int dim;
  int sampleIndex;
  std::string relation;
  double residual;
};

struct TwistedRelationsReport {
  std::uint64_t seed = 0;
  int samplesPerDim = 0;
  std::vector<int> dims;
  long checked = 0;
  std::vector<RelationFailure> failures;
  double worstResidual = 0.0;
  bool ok() const { return failures.empty(); }
};

// Verifies the ten twisted-implication identities and the MP property for
// (j,i) with j in 2..5, (j,i) != (3,1), on seeded random projection pairs.
TwistedRelationsReport verifyTwistedRelations(
    const std::vector<int>& dims = {2, 3, 4}, int samplesPerDim = 200,
    std::uint64_t seed = 0xC0FFEE, bool parallel = true);

struct WitnessReport {
  double theta = 0.0;
  bool ok = false;
  double comNorm = 0.0;          // |com(P,Q)|, must be ~0
  std::complex<double> ipOnePhi; // <1|phi> = sqrt(3)/2
  std::complex<double> ipPhiPhiTheta;  // <phi|phi(theta)> = (1+3e^{it})/4
  std::complex<double> ipOnePhiTheta;  // <1|phi(theta)> = sqrt(3)e^{it}/2
  double resultVsExpected = 0.0; // |result - |phi(t)><phi(t)||
  double distanceToSix[6] = {0, 0, 0, 0, 0, 0};  // 0,P,P',Q,Q',1
  Mat result;
  std::string summary() const;
};

// Reconstructs the non-polynomiality argument on C^2 for =>_{1,theta,1}:
// the value escapes the six-element subalgebra generated by {P,Q}.
// theta = 0 (where the witness degenerates) is rejected.
WitnessReport nonPolynomialWitness(double theta);

// Re/Im parts of a matrix as CSV rows.
std::string matrixToCsv(const Mat& m);

}  // namespace omset::matrix
