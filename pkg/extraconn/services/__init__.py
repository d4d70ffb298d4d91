# services package – Mycielskian, connectivity solvers and batch verification
