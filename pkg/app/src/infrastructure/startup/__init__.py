# Infrastructure Startup Package
