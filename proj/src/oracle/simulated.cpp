#include "simlearn/oracle/simulated.hpp"

namespace simlearn {

SimulatedOracle::SimulatedOracle(OracleSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
}

double SimulatedOracle::query(const Element& x, const Element& y) {
    return ledger_.fetch_or_compute(x, y, [this](const Element& a, const Element& b) {
        return truth(a, b);
    });
}

double SimulatedOracle::truth(const Element& x, const Element& y) const {
    return cross_similarity(spec_.beta_for(x.group, y.group), x, y);
}

}  // namespace simlearn
