#pragma once

#define DETMULT_VERSION "0.1.0"
