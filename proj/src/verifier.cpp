#include "xorpb/verifier.hpp"

#include <fstream>
#include <ostream>

#include "xorpb/redundancy.hpp"

namespace xorpb {

Verifier::Verifier(const Formula& formula, VerifyOptions opts)
    : formula_(&formula), vars_(formula.vars), opts_(opts) {}

void Verifier::reject(const std::string& reason, size_t line) {
  result_.status = VerifyResult::Status::Rejected;
  result_.stepIndex = steps_;
  result_.line = line;
  result_.reason = reason;
  rejected_ = true;
}

uint64_t Verifier::store(PBConstraint c) {
  uint64_t id = db_.add(std::move(c));
  engine_.attach(id, db_.find(id));
  return id;
}

bool Verifier::applyStep(const ProofStep& s, size_t line) {
  if (rejected_ || concluded_) {
    if (concluded_ && !rejected_) {
      ++steps_;
      reject("proof continues after conclusion", line);
    }
    return false;
  }
  ++steps_;
  result_.stats.stepsChecked = steps_;

  if (opts_.traceOut && steps_ <= opts_.traceSteps) {
    std::ostream& os = *opts_.traceOut;
    os << "step " << steps_ << " (line " << line << "): ";
    ProofWriter(os, vars_).write(s);
  }

  if (!headerSeen_ && s.kind != ProofStep::Kind::Header) {
    reject("first step must be the proof header", line);
    return false;
  }

  try {
    switch (s.kind) {
      case ProofStep::Kind::Header:
        if (headerSeen_) {
          reject("duplicate proof header", line);
          return false;
        }
        headerSeen_ = true;
        break;

      case ProofStep::Kind::Load:
        if (loaded_) {
          reject("duplicate 'f' step", line);
          return false;
        }
        if (s.count != formula_->constraints.size()) {
          reject("'f " + std::to_string(s.count) + "' does not match formula size " +
                     std::to_string(formula_->constraints.size()),
                 line);
          return false;
        }
        for (const PBConstraint& c : formula_->constraints) store(c);
        loaded_ = true;
        break;

      case ProofStep::Kind::Red: {
        ++result_.stats.redChecks;
        RedundancyVerdict v = redundancyCheck(db_, engine_, s.constraint, s.witness);
        if (!v.accepted) {
          reject("red step not redundant: " + v.failingCheck, line);
          return false;
        }
        store(s.constraint);
        break;
      }

      case ProofStep::Kind::Pol:
        store(evalRpn(s.tokens, db_));
        break;

      case ProofStep::Kind::Rup: {
        ++result_.stats.rupChecks;
        if (!engine_.rupCheck(s.constraint)) {
          reject("rup constraint is not reverse unit propagatable", line);
          return false;
        }
        store(s.constraint);
        break;
      }

      case ProofStep::Kind::Del:
        for (uint64_t id : s.ids) {
          if (!db_.erase(id)) {
            reject("del of unknown constraint id " + std::to_string(id), line);
            return false;
          }
          engine_.detach(id);
        }
        break;

      case ProofStep::Kind::Conclusion: {
        const PBConstraint* c = db_.find(s.id);
        if (!c) {
          reject("conclusion names unknown constraint id " + std::to_string(s.id), line);
          return false;
        }
        if (!c->isContradiction()) {
          reject("conclusion constraint " + std::to_string(s.id) + " is not the contradiction 0 >= 1",
                 line);
          return false;
        }
        concluded_ = true;
        result_.status = VerifyResult::Status::VerifiedUnsat;
        return false;
      }
    }
  } catch (const Error& e) {
    reject(e.what(), line);
    return false;
  }
  return true;
}

VerifyResult Verifier::finish() {
  if (!rejected_ && !concluded_) {
    result_.status = VerifyResult::Status::AllStepsValid;
    if (opts_.expectUnsat) {
      ++steps_;
      reject("expected unsat: proof has no conclusion step", 0);
    }
  }
  result_.stats.propagations = engine_.propagationCount();
  result_.stats.peakDbSize = db_.peakLiveCount();
  return result_;
}

VerifyResult verify(const Formula& formula, std::istream& proof, VerifyOptions opts) {
  Verifier v(formula, opts);
  ProofParser parser(proof, v.vars());
  for (;;) {
    std::optional<ProofParser::Item> item;
    try {
      item = parser.next();
    } catch (const ParseError& e) {
      // a malformed line is a failed step
      return v.rejectAndFinish(e.what(), e.line);
    }
    if (!item) break;
    v.applyStep(item->step, item->line);
    if (v.rejected()) break;
    // after a conclusion we keep scanning: trailing steps are rejected
  }
  return v.finish();
}

VerifyResult verifyFiles(const std::string& formulaPath, const std::string& proofPath,
                         VerifyOptions opts) {
  Formula f = parseFormulaFile(formulaPath);
  std::ifstream proof(proofPath);
  if (!proof) throw Error("cannot open " + proofPath);
  return verify(f, proof, opts);
}

}  // namespace xorpb
