#pragma once

#include "copos/certificate.hpp"
#include "copos/encoding.hpp"
#include "copos/error.hpp"
#include "copos/instances.hpp"
#include "copos/io.hpp"
#include "copos/lcp.hpp"
#include "copos/linalg.hpp"
#include "copos/matrix.hpp"
#include "copos/oracle.hpp"
#include "copos/rational.hpp"
