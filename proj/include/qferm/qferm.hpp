#pragma once

// Everything at once.

#include "qferm/numbers.hpp"
#include "qferm/laurent.hpp"
#include "qferm/ratq.hpp"
#include "qferm/qbinom.hpp"
#include "qferm/grading.hpp"
#include "qferm/series.hpp"
#include "qferm/plethysm.hpp"
#include "qferm/series_ops.hpp"
#include "qferm/partitions.hpp"
#include "qferm/quiver.hpp"
#include "qferm/weyl.hpp"
#include "qferm/fermionic.hpp"
#include "qferm/hua.hpp"
#include "qferm/report.hpp"
#include "qferm/checks.hpp"
#include "qferm/oracle.hpp"
