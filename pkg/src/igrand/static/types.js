/** Payload shapes served by the workbench API. */
export {};
