# Stable Basis Application
