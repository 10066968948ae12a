#pragma once

// Certificate bundles for GP(8,3)/K6, GP(13,5)/K7 and GP(19,7)/K8. The text
// lives in data/certificates and is embedded by the build.

#include "minorsat/certificates.hpp"
#include "minorsat/paper_bundles_data.hpp"

namespace minorsat {

inline const char* paper_bundle_text(int r) {
    switch (r) {
        case 6: return data::gp8_3_k6;
        case 7: return data::gp13_5_k7;
        case 8: return data::gp19_7_k8;
        default: throw cert_error("no bundle for r = " + std::to_string(r) + " (expected 6, 7 or 8)");
    }
}

inline SaturationBundle paper_bundle(int r) { return parse_bundle(std::string(paper_bundle_text(r))); }

}  // namespace minorsat
