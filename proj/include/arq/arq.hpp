#pragma once

#include "arq/ar_quiver.hpp"
#include "arq/coxeter.hpp"
#include "arq/dag.hpp"
#include "arq/derived.hpp"
#include "arq/error.hpp"
#include "arq/hammock.hpp"
#include "arq/oracle.hpp"
#include "arq/quiver.hpp"
#include "arq/repetitive.hpp"
#include "arq/report.hpp"
