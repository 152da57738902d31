#ifndef RATSEARCH_SRC_GEOMETRY_DETAIL_HPP
#define RATSEARCH_SRC_GEOMETRY_DETAIL_HPP

#include "ratsearch/geometry.hpp"

namespace ratsearch {

// the original elimination-ideal route for the projection step, kept as an
// independent cross-check for the resultant route used in production
BirationalStep project_from_center_elimination(const SpaceCurve& C, const CandidateCenter& m);

}  // namespace ratsearch

#endif
