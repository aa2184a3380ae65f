#pragma once

#include "simlearn/oracle/oracle.hpp"
#include "simlearn/oracle/weights.hpp"

namespace simlearn {

/// Oracle backed by a known weighted-Euclidean similarity structure.
/// Holds its own ledger; use one instance per learner when query counts
/// must not be shared.
class SimulatedOracle final : public Oracle {
public:
    explicit SimulatedOracle(OracleSpec spec);

    double query(const Element& x, const Element& y) override;
    double truth(const Element& x, const Element& y) const override;
    const QueryLedger& ledger() const override { return ledger_; }

    const OracleSpec& spec() const { return spec_; }

private:
    OracleSpec spec_;
    QueryLedger ledger_;
};

}  // namespace simlearn
