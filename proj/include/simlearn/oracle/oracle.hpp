#pragma once

#include "simlearn/core/element.hpp"
#include "simlearn/core/ledger.hpp"

namespace simlearn {

/// Source of cross-group similarity answers. query() is the billed interface
/// learners must use; truth() answers without touching the ledger and exists
/// for evaluation only.
class Oracle {
public:
    virtual ~Oracle() = default;

    /// Billed similarity for a cross-group pair. Repeats of the same
    /// unordered pair are served from cache and not re-billed.
    virtual double query(const Element& x, const Element& y) = 0;

    /// Same answer as query() but free of charge; for scoring predictions.
    virtual double truth(const Element& x, const Element& y) const = 0;

    virtual const QueryLedger& ledger() const = 0;
};

}  // namespace simlearn
