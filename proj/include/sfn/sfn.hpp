#ifndef SFN_SFN_HPP
#define SFN_SFN_HPP

#include "sfn/arith.hpp"
#include "sfn/catalog.hpp"
#include "sfn/error.hpp"
#include "sfn/framing.hpp"
#include "sfn/io.hpp"
#include "sfn/mseries.hpp"
#include "sfn/numfield.hpp"
#include "sfn/padic.hpp"
#include "sfn/series.hpp"
#include "sfn/sfunc.hpp"

#endif  // SFN_SFN_HPP
