#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "xorpb/database.hpp"
#include "xorpb/proof_io.hpp"
#include "xorpb/propagation.hpp"

namespace xorpb {

struct VerifyOptions {
  bool expectUnsat = false;   // require a conclusion step
  uint64_t traceSteps = 0;    // echo the first n checked steps
  std::ostream* traceOut = nullptr;
};

struct VerifyStats {
  uint64_t stepsChecked = 0;
  uint64_t rupChecks = 0;
  uint64_t redChecks = 0;
  uint64_t propagations = 0;
  size_t peakDbSize = 0;
};

struct VerifyResult {
  enum class Status { VerifiedUnsat, AllStepsValid, Rejected };
  Status status = Status::AllStepsValid;
  uint64_t stepIndex = 0;  // 1-based ordinal of the offending step (Rejected)
  size_t line = 0;         // proof file line of that step, when known
  std::string reason;
  VerifyStats stats;

  bool ok() const { return status != Status::Rejected; }
};

// Step-by-step proof checker over an ID-indexed constraint database.
// Steps are order-dependent; one checking thread drives applyStep.
class Verifier {
 public:
  explicit Verifier(const Formula& formula, VerifyOptions opts = {});

  // Applies one step. Returns false once a verdict is final (rejection or
  // conclusion); the caller should stop feeding steps.
  bool applyStep(const ProofStep& s, size_t line = 0);

  VerifyResult finish();

  // Marks a rejection attributable to the next step (e.g. a parse error)
  // and finalizes the result.
  VerifyResult rejectAndFinish(const std::string& reason, size_t line) {
    ++steps_;
    reject(reason, line);
    return finish();
  }

  bool rejected() const { return rejected_; }
  const ConstraintDatabase& database() const { return db_; }
  VarTable& vars() { return vars_; }

 private:
  void reject(const std::string& reason, size_t line);
  uint64_t store(PBConstraint c);

  const Formula* formula_;
  VarTable vars_;  // private copy; proof lines may add auxiliary names
  VerifyOptions opts_;
  ConstraintDatabase db_;
  PropagationEngine engine_;
  VerifyResult result_;
  uint64_t steps_ = 0;
  bool headerSeen_ = false;
  bool loaded_ = false;
  bool concluded_ = false;
  bool rejected_ = false;
};

// Drives a full proof stream against a formula.
VerifyResult verify(const Formula& formula, std::istream& proof, VerifyOptions opts = {});
VerifyResult verifyFiles(const std::string& formulaPath, const std::string& proofPath,
                         VerifyOptions opts = {});

}  // namespace xorpb
