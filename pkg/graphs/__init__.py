# Brute-force ribbon graph enumeration and the oracles built on it
