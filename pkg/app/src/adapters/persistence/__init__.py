# Persistence Adapters
