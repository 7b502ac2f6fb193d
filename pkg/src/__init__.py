# Grover search state-vector simulator
