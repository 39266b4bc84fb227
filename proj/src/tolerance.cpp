#include "hyperlam/tolerance.hpp"

namespace hyperlam {

const Tolerances& default_tolerances()
{
    static const Tolerances tolerances{};
    return tolerances;
}

}  // namespace hyperlam
